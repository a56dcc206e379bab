#include "hk/char_classes.hpp"

#include <cassert>
#include <sstream>

namespace hk {

// ---------------------------------------------------------------------------
// WeightedPoly
// ---------------------------------------------------------------------------

WeightedPoly WeightedPoly::constant(int cap, const Rational& c) {
    WeightedPoly p(cap);
    p.add_term(Monomial(cap, 0), c);
    return p;
}

WeightedPoly WeightedPoly::variable(int cap, int w) {
    if (w < 1) throw RangeError("variable index must be >= 1");
    WeightedPoly p(cap);
    if (w <= cap) {
        Monomial m(cap, 0);
        m[w - 1] = 1;
        p.add_term(m, Rational(1));
    }
    return p;
}

int WeightedPoly::monomial_weight(const Monomial& m) {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
    return w;
}

void WeightedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0 || monomial_weight(m) > cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational WeightedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o) {
    assert(cap_ == o.cap_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& o) {
    assert(cap_ == o.cap_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
    assert(a.cap_ == b.cap_);
    WeightedPoly r(a.cap_);
    for (const auto& [ma, ca] : a.terms_) {
        int wa = WeightedPoly::monomial_weight(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (wa + WeightedPoly::monomial_weight(mb) > a.cap_) continue;
            WeightedPoly::Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

WeightedPoly operator*(const Rational& s, const WeightedPoly& a) {
    WeightedPoly r(a.cap_);
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
    return r;
}

WeightedPoly WeightedPoly::exp() const {
    Monomial unit(cap_, 0);
    if (coeff(unit) != 0) throw RangeError("exp requires zero constant term");
    WeightedPoly result = constant(cap_, Rational(1));
    WeightedPoly power = constant(cap_, Rational(1));
    Rational fact(1);
    for (int m = 1; m <= cap_; ++m) {
        power = power * (*this);
        if (power.is_zero()) break;
        fact *= m;
        result += Rational(1) / fact * power;
    }
    return result;
}

WeightedPoly WeightedPoly::component(int weight) const {
    WeightedPoly r(cap_);
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) == weight) r.add_term(m, c);
    return r;
}

WeightedPoly WeightedPoly::substitute(const std::vector<WeightedPoly>& values) const {
    WeightedPoly r(cap_);
    for (const auto& [m, c] : terms_) {
        WeightedPoly term = constant(cap_, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term = term * values[i + 1];
        r += term;
    }
    return r;
}

std::string WeightedPoly::str(const std::string& varname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << varname << 2 * (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Truncated univariate power series over Q (internal helper).
// ---------------------------------------------------------------------------

namespace {

struct Series {
    std::vector<Rational> c; // coefficient of x^i

    explicit Series(int order) : c(order + 1, Rational(0)) {}
    int order() const { return static_cast<int>(c.size()) - 1; }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
};

// ln(s) for a series with constant term 1.
Series series_log(const Series& s) {
    const int ord = s.order();
    Series u = s;
    u.c[0] = 0;
    Series result(ord), power(ord);
    power.c[0] = 1;
    for (int m = 1; m <= ord; ++m) {
        power = power * u;
        Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);
        for (int i = 0; i <= ord; ++i) result.c[i] += sign / m * power.c[i];
    }
    return result;
}

// Reciprocal of a series with nonzero constant term.
Series series_inverse(const Series& s) {
    const int ord = s.order();
    Series r(ord);
    r.c[0] = 1 / s.c[0];
    for (int i = 1; i <= ord; ++i) {
        Rational acc(0);
        for (int j = 1; j <= i; ++j) acc += s.c[j] * r.c[i - j];
        r.c[i] = -acc / s.c[0];
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Modified Bernoulli numbers and Todd series
// ---------------------------------------------------------------------------

BernoulliTable modified_bernoulli(int k_max) {
    if (k_max < 1) throw RangeError("k_max must be >= 1");
    const int ord = 2 * k_max;
    // sinh(x/2)/(x/2) = sum x^{2j} / (4^j (2j+1)!)
    Series s(ord);
    Rational four_pow(1);
    for (int j = 0; 2 * j <= ord; ++j) {
        s.c[2 * j] = Rational(1) / (four_pow * Rational(factorial(2 * j + 1)));
        four_pow *= 4;
    }
    Series l = series_log(s);
    std::vector<Rational> b;
    for (int k = 1; k <= k_max; ++k) b.push_back(l.c[2 * k] / 2);
    return BernoulliTable(std::move(b));
}

Rational BernoulliTable::value(int k) const {
    if (k < 1 || k > order()) throw RangeError("Bernoulli index out of computed order");
    return b_[k - 1];
}

std::vector<WeightedPoly> ch_from_c(int n) {
    if (n < 1) throw RangeError("n must be >= 1");
    // Newton's identities over e_d with e_{2w} = c_{2w} and e_odd = 0.
    std::vector<WeightedPoly> e(2 * n + 1, WeightedPoly(n));
    e[0] = WeightedPoly::constant(n, Rational(1));
    for (int w = 1; w <= n; ++w) e[2 * w] = WeightedPoly::variable(n, w);

    std::vector<WeightedPoly> p(2 * n + 1, WeightedPoly(n));
    for (int d = 1; d <= 2 * n; ++d) {
        WeightedPoly acc(n);
        for (int i = 1; i < d; ++i) {
            Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            acc += sign * (e[i] * p[d - i]);
        }
        Rational sign = (d % 2 == 1) ? Rational(1) : Rational(-1);
        acc += sign * Rational(d) * e[d];
        p[d] = acc;
    }

    std::vector<WeightedPoly> ch(n + 1, WeightedPoly(n));
    for (int w = 1; w <= n; ++w)
        ch[w] = Rational(1) / Rational(factorial(2 * w)) * p[2 * w];
    return ch;
}

std::vector<WeightedPoly> c_from_ch(int n) {
    if (n < 1) throw RangeError("n must be >= 1");
    // p_{2w} = (2w)! ch_{2w}, p_odd = 0; invert Newton's identities.
    std::vector<WeightedPoly> p(2 * n + 1, WeightedPoly(n));
    for (int w = 1; w <= n; ++w)
        p[2 * w] = Rational(factorial(2 * w)) * WeightedPoly::variable(n, w);

    std::vector<WeightedPoly> e(2 * n + 1, WeightedPoly(n));
    e[0] = WeightedPoly::constant(n, Rational(1));
    for (int d = 1; d <= 2 * n; ++d) {
        WeightedPoly acc(n);
        for (int i = 1; i <= d; ++i) {
            Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            acc += sign * (e[d - i] * p[i]);
        }
        e[d] = Rational(1) / Rational(d) * acc;
    }

    std::vector<WeightedPoly> c(n + 1, WeightedPoly(n));
    for (int w = 1; w <= n; ++w) c[w] = e[2 * w];
    return c;
}

namespace {

// -sum_{k=1}^n b_{2k} (2k)! ch_{2k} expressed in c-variables.
WeightedPoly td_log_half(int n) {
    BernoulliTable b = modified_bernoulli(n);
    auto ch = ch_from_c(n);
    WeightedPoly s(n);
    for (int k = 1; k <= n; ++k)
        s += -b.value(k) * Rational(factorial(2 * k)) * ch[k];
    return s;
}

} // namespace

WeightedPoly td_half(int n) { return td_log_half(n).exp(); }

WeightedPoly td(int n) {
    WeightedPoly viaexp = (Rational(2) * td_log_half(n)).exp();
    WeightedPoly h = td_half(n);
    if (!(viaexp == h * h))
        throw std::logic_error("td(n): exponential route disagrees with td_half^2");
    return viaexp;
}

WeightedPoly classical_todd(int n) {
    // ln( x/(1-e^{-x}) ) up to x^{2n}, including odd terms; odd power sums
    // vanish when all odd Chern classes do, so only even ones survive.
    const int ord = 2 * n;
    Series q(ord); // (1-e^{-x})/x = sum_{j>=0} (-1)^j x^j / (j+1)!
    for (int j = 0; j <= ord; ++j) {
        Rational v = Rational(1) / Rational(factorial(j + 1));
        q.c[j] = (j % 2 == 0) ? v : -v;
    }
    Series a = series_log(series_inverse(q));

    auto ch = ch_from_c(n);
    WeightedPoly s(n);
    for (int w = 1; w <= n; ++w)
        s += a.c[2 * w] * Rational(factorial(2 * w)) * ch[w]; // p_{2w} = (2w)! ch_{2w}
    return s.exp();
}

// ---------------------------------------------------------------------------
// Wheel-symbol map
// ---------------------------------------------------------------------------

void RwClass::add_part(const std::array<int, 3>& k, const WeightedPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = parts.emplace(k, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) parts.erase(it);
    }
}

namespace {

struct GeneratorTable {
    std::string strut_code, theta_code;
    int strut_sign = 1, theta_sign = 1;
    std::map<std::string, std::pair<int, int>> wheel_codes; // code -> (k, sign)

    explicit GeneratorTable(int max_wheel) {
        CanonicalForm s = canonicalize(strut());
        strut_code = s.key;
        strut_sign = s.sign;
        CanonicalForm t = canonicalize(theta());
        theta_code = t.key;
        theta_sign = t.sign;
        for (int k = 1; k <= max_wheel; ++k) {
            CanonicalForm w = canonicalize(wheel(k));
            wheel_codes[w.key] = {k, w.sign};
        }
    }
};

} // namespace

RwClass rw_symbol_map(const GraphVector& g, int n) {
    if (n < 1) throw RangeError("n must be >= 1");
    auto ch = ch_from_c(n);
    // Wheels larger than the truncation weight map to zero; classify them
    // anyway so that unsupported components are still rejected.
    int max_wheel = 0;
    for (const auto& [key, coeff] : g.terms()) {
        std::size_t pos = 0;
        while (pos < key.size()) {
            int k = static_cast<std::uint8_t>(key[pos]);
            int l = static_cast<std::uint8_t>(key[pos + 1]);
            max_wheel = std::max(max_wheel, k / 2);
            pos += 2 + 3 * k + l;
        }
    }
    GeneratorTable gens(std::max(max_wheel, 1));

    RwClass out;
    for (const auto& [key, coeff] : g.terms()) {
        std::array<int, 3> sym = {0, 0, 0};
        WeightedPoly poly = WeightedPoly::constant(n, coeff);
        std::size_t pos = 0;
        bool zero = false;
        while (pos < key.size() && !zero) {
            int k = static_cast<std::uint8_t>(key[pos]);
            int l = static_cast<std::uint8_t>(key[pos + 1]);
            std::string code = key.substr(pos, 2 + 3 * k + l);
            pos += 2 + 3 * k + l;
            if (code == gens.strut_code) {
                sym[0] += 1;
                poly = Rational(2 * gens.strut_sign) * poly;
            } else if (code == gens.theta_code) {
                sym[1] += 1;
                sym[2] -= 1;
                poly = Rational(48 * gens.theta_sign) * poly;
            } else if (auto it = gens.wheel_codes.find(code); it != gens.wheel_codes.end()) {
                auto [wk, wsign] = it->second;
                if (wk > n) {
                    zero = true;
                    break;
                }
                poly = Rational(-wsign) * Rational(factorial(2 * wk)) * (poly * ch[wk]);
            } else {
                throw UnsupportedDiagram("component outside the generator set: " +
                                         key_description(code));
            }
        }
        if (!zero) out.add_part(sym, poly);
    }
    return out;
}

} // namespace hk
