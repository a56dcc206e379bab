#include "hk/graph_vector.hpp"

#include <sstream>

#include "hk/char_classes.hpp"

namespace hk {

GraphVector GraphVector::single(const JacobiDiagram& d, const Rational& c) {
    GraphVector g;
    g.add_term(d, c);
    return g;
}

void GraphVector::add_term(const JacobiDiagram& d, const Rational& c) {
    if (c == 0) return;
    CanonicalForm cf = canonicalize(d);
    if (cf.sign == 0) return;
    add_key(cf.key, cf.sign * c);
}

void GraphVector::add_key(const std::string& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
    for (const auto& [k, c] : o.terms_) add_key(k, c);
    return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& o) {
    for (const auto& [k, c] : o.terms_) add_key(k, -c);
    return *this;
}

GraphVector operator*(const Rational& s, const GraphVector& g) {
    GraphVector r;
    if (s == 0) return r;
    for (const auto& [k, c] : g.terms_) r.terms_[k] = s * c;
    return r;
}

std::string GraphVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")*" << key_description(k);
    }
    return os.str();
}

GraphVector product(const GraphVector& a, const GraphVector& b) {
    GraphVector r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            // Keys concatenate componentwise, so the union of two canonical
            // representatives only needs its component codes re-sorted.
            JacobiDiagram u = disjoint_union(canonical_decode(ka), canonical_decode(kb));
            r.add_term(u, ca * cb);
        }
    return r;
}

GraphVector differential(const GraphVector& g) {
    GraphVector r;
    for (const auto& [key, coeff] : g.terms()) {
        JacobiDiagram d = canonical_decode(key);
        if (!is_in_B_prime(d))
            throw StrutPresent("differential is undefined on diagrams with strut components");
        const auto& uni = d.univalent;
        for (std::size_t i = 0; i < uni.size(); ++i)
            for (std::size_t j = i + 1; j < uni.size(); ++j)
                r.add_term(glue_univalent(d, uni[i], uni[j]), coeff);
    }
    return r;
}

namespace {

// Multisets {j_1 <= ... <= j_m} with sum k; coefficient prod b_{2j} / prod mult!.
void wheel_partitions(int remaining, int min_part,
                      std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int j = min_part; j <= remaining; ++j) {
        current.push_back(j);
        wheel_partitions(remaining - j, j, current, out);
        current.pop_back();
    }
}

} // namespace

GraphVector wheeling_piece(int k) {
    if (k < 0) throw RangeError("wheeling piece index must be >= 0");
    if (k == 0) return GraphVector::unit();
    BernoulliTable b = modified_bernoulli(k);

    std::vector<std::vector<int>> partitions;
    std::vector<int> current;
    wheel_partitions(k, 1, current, partitions);

    GraphVector r;
    for (const auto& part : partitions) {
        Rational coeff(1);
        JacobiDiagram d = empty_diagram();
        int run = 1;
        for (std::size_t i = 0; i < part.size(); ++i) {
            coeff *= b.value(part[i]);
            d = disjoint_union(d, wheel(part[i]));
            if (i + 1 < part.size() && part[i + 1] == part[i]) {
                ++run;
            } else {
                coeff /= Rational(factorial(run));
                run = 1;
            }
        }
        r.add_term(d, coeff);
    }
    return r;
}

GraphVector wheeling_element(int max_weight) {
    if (max_weight < 0) throw RangeError("max_weight must be >= 0");
    GraphVector r;
    for (int k = 0; k <= max_weight; ++k) r += wheeling_piece(k);
    return r;
}

} // namespace hk
