#include "hk/exterior.hpp"

#include <bit>
#include <sstream>

namespace hk {

Rational SymplecticSpace::sigma(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const {
    Rational r(0);
    for (int i = 0; i < n; ++i)
        r += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
    return r;
}

int SymplecticSpace::sigma_basis(int i, int j) const {
    if (i % 2 == 1 && j == i + 1) return 1;
    if (j % 2 == 1 && i == j + 1) return -1;
    return 0;
}

ExteriorElement ExteriorElement::scalar(const Rational& c) {
    ExteriorElement e;
    e.add_term({0, 0}, c);
    return e;
}

ExteriorElement ExteriorElement::theta(int i) {
    ExteriorElement e;
    e.add_term({std::uint64_t(1) << (i - 1), 0}, Rational(1));
    return e;
}

ExteriorElement ExteriorElement::aux_generator(int j) {
    ExteriorElement e;
    e.add_term({0, std::uint64_t(1) << (j - 1)}, Rational(1));
    return e;
}

ExteriorElement ExteriorElement::sigma_form(const SymplecticSpace& sp) {
    ExteriorElement e;
    for (int i = 1; i <= sp.n; ++i) {
        std::uint64_t m = (std::uint64_t(1) << (2 * i - 2)) | (std::uint64_t(1) << (2 * i - 1));
        e.add_term({m, 0}, Rational(1));
    }
    return e;
}

ExteriorElement ExteriorElement::flat(const SymplecticSpace& sp,
                                      const std::vector<Rational>& w) {
    ExteriorElement e;
    for (int m = 1; m <= sp.dim(); ++m) {
        // sigma(w, e_m): e_{2i-1} pairs with -w_{2i}, e_{2i} with +w_{2i-1}.
        Rational c = (m % 2 == 1) ? -w[m] : w[m - 2];
        if (c != 0) e.add_term({std::uint64_t(1) << (m - 1), 0}, c);
    }
    return e;
}

void ExteriorElement::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExteriorElement operator*(const Rational& s, const ExteriorElement& a) {
    ExteriorElement r;
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
    return r;
}

namespace {

// Sign of merging two disjoint sorted index sets: parity of the number of
// pairs (i in a, j in b) with i > j.
int shuffle_sign(std::uint64_t a, std::uint64_t b) {
    int inversions = 0;
    while (b) {
        std::uint64_t lowest = b & (~b + 1);
        inversions += std::popcount(a & ~(lowest - 1) & ~lowest);
        b ^= lowest;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

ExteriorElement ExteriorElement::wedge(const ExteriorElement& o) const {
    ExteriorElement r;
    for (const auto& [ma, ca] : terms_) {
        int aux_deg_a = std::popcount(ma.aux);
        for (const auto& [mb, cb] : o.terms_) {
            if ((ma.form & mb.form) || (ma.aux & mb.aux)) continue;
            int s = shuffle_sign(ma.form, mb.form) * shuffle_sign(ma.aux, mb.aux);
            if ((aux_deg_a * std::popcount(mb.form)) % 2) s = -s;
            r.add_term({ma.form | mb.form, ma.aux | mb.aux}, s * ca * cb);
        }
    }
    return r;
}

std::string ExteriorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (int i = 0; i < 64; ++i)
            if (m.form >> i & 1) os << "*th" << i + 1;
        for (int j = 0; j < 64; ++j)
            if (m.aux >> j & 1) os << "*a" << j + 1;
    }
    return os.str();
}

ExteriorElement contract_delta(const ExteriorElement& x, const SymplecticSpace& sp) {
    ExteriorElement r;
    for (const auto& [m, c] : x.terms()) {
        for (int i = 1; i <= sp.n; ++i) {
            std::uint64_t pair = (std::uint64_t(1) << (2 * i - 2)) | (std::uint64_t(1) << (2 * i - 1));
            if ((m.form & pair) != pair) continue;
            // Positions (1-based) of the two removed indices in the sorted
            // monomial give the (-1)^{s+t-1} factor of the definition.
            std::uint64_t below_s = m.form & ((std::uint64_t(1) << (2 * i - 2)) - 1);
            int s = std::popcount(below_s) + 1;
            int t = s + 1; // 2i-1 and 2i are adjacent in sorted order
            int sign = ((s + t - 1) % 2 == 0) ? 1 : -1;
            r.add_term({m.form & ~pair, m.aux}, sign * c);
        }
    }
    return r;
}

ExteriorElement sigma_wedge(const ExteriorElement& x, const SymplecticSpace& sp) {
    return ExteriorElement::sigma_form(sp).wedge(x);
}

ExteriorElement pi_operator(const ExteriorElement& x, const SymplecticSpace& sp) {
    ExteriorElement r;
    for (const auto& [m, c] : x.terms())
        r.add_term(m, Rational(std::popcount(m.form) - sp.n) * c);
    return r;
}

ExteriorElement random_homogeneous(const SymplecticSpace& sp, int aux_gens, Rng& rng) {
    const int p = static_cast<int>(rng.uniform(0, sp.dim()));
    const int q = static_cast<int>(rng.uniform(0, aux_gens));
    const int nterms = static_cast<int>(rng.uniform(1, 4));
    ExteriorElement x;
    for (int t = 0; t < nterms; ++t) {
        std::uint64_t form = 0, aux = 0;
        while (std::popcount(form) < p)
            form |= std::uint64_t(1) << rng.uniform(0, sp.dim() - 1);
        while (std::popcount(aux) < q)
            aux |= std::uint64_t(1) << rng.uniform(0, aux_gens - 1);
        Rational c(rng.nonzero(3), rng.uniform(1, 3));
        c.canonicalize();
        x.add_term({form, aux}, c);
    }
    return x;
}

Sl2Report sl2_check(const SymplecticSpace& sp, int aux_gens, int trials, std::uint64_t seed) {
    if (trials < 1) throw RangeError("trials must be >= 1");
    Sl2Report rep;
    rep.n = sp.n;
    rep.gens = aux_gens;
    rep.trials = trials;
    rep.seed = seed;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        ExteriorElement x = random_homogeneous(sp, aux_gens, rng);

        ExteriorElement lhs1 = sigma_wedge(contract_delta(x, sp), sp) -
                               contract_delta(sigma_wedge(x, sp), sp);
        bool ok = lhs1 == pi_operator(x, sp);

        ExteriorElement lhs2 = pi_operator(sigma_wedge(x, sp), sp) -
                               sigma_wedge(pi_operator(x, sp), sp);
        ok = ok && lhs2 == Rational(2) * sigma_wedge(x, sp);

        ExteriorElement lhs3 = pi_operator(contract_delta(x, sp), sp) -
                               contract_delta(pi_operator(x, sp), sp);
        ok = ok && lhs3 == Rational(-2) * contract_delta(x, sp);

        if (!ok) {
            ++rep.failures;
            if (rep.witness.empty()) rep.witness = x.str();
        }
    }
    return rep;
}

} // namespace hk
