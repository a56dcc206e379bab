#ifndef HK_LAURENT_HPP
#define HK_LAURENT_HPP

#include <map>
#include <sstream>
#include <string>

#include "hk/rational.hpp"

namespace hk {

// Laurent polynomial in the formal parameter lambda with exact rational
// coefficients. Zero coefficients are never stored.
class Laurent {
  public:
    Laurent() = default;
    Laurent(const Rational& c, int exponent = 0) {
        if (c != 0) coeffs_[exponent] = c;
    }
    static Laurent monomial(const Rational& c, int exponent) { return Laurent(c, exponent); }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    // True when the support is a single exponent with positive coefficient.
    bool is_positive_monomial() const {
        return coeffs_.size() == 1 && coeffs_.begin()->second > 0;
    }

    bool all_coeffs_positive() const {
        if (coeffs_.empty()) return false;
        for (const auto& [e, c] : coeffs_)
            if (c <= 0) return false;
        return true;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(c, e);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(-c, e);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ca * cb, ea + eb);
        return r;
    }
    friend Laurent operator*(const Rational& s, const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.coeffs_) r.add_term(s * c, e);
        return r;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.coeffs_ == b.coeffs_;
    }

    void add_term(const Rational& c, int exponent) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = abs(c);
            if (a != 1 || e == 0) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "lambda";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    std::map<int, Rational> coeffs_;
};

} // namespace hk

#endif
