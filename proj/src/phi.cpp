#include "hk/phi.hpp"

#include <algorithm>

namespace hk {

namespace {

int permutation_parity(const std::vector<int>& from, const std::vector<int>& to) {
    // Sign of the permutation carrying sequence `from` onto sequence `to`.
    std::vector<int> pos;
    pos.resize(from.size());
    std::vector<std::pair<int, int>> sorted_from;
    for (std::size_t i = 0; i < from.size(); ++i) sorted_from.push_back({from[i], int(i)});
    std::sort(sorted_from.begin(), sorted_from.end());
    auto find_pos = [&](int flag) {
        auto it = std::lower_bound(sorted_from.begin(), sorted_from.end(),
                                   std::make_pair(flag, -1));
        if (it == sorted_from.end() || it->first != flag)
            throw InvalidLabelling("sequences do not contain the same flags");
        return it->second;
    };
    std::vector<int> perm;
    for (int f : to) perm.push_back(find_pos(f));
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

struct EdgeLayout {
    // Edges with both flags trivalent, original slot order.
    std::vector<std::array<int, 2>> tt;
    // Leg edges as (trivalent flag, univalent flag) in normalized order.
    std::vector<std::array<int, 2>> legs;
    int strut_count = 0;
    int swap_sign = 1;      // -1 per univalent-first leg edge
    int wedge_sign = 1;     // edge order vs triple order comparison
};

EdgeLayout analyze(const JacobiDiagram& d) {
    std::vector<char> is_uni(d.num_flags + 1, 0);
    for (int u : d.univalent) is_uni[u] = 1;

    EdgeLayout lay;
    std::vector<int> numeric_seq;
    for (const auto& e : d.edges) {
        bool u0 = is_uni[e[0]], u1 = is_uni[e[1]];
        if (u0 && u1) {
            ++lay.strut_count;
        } else if (!u0 && !u1) {
            lay.tt.push_back(e);
            numeric_seq.push_back(e[0]);
            numeric_seq.push_back(e[1]);
        } else {
            if (u0) lay.swap_sign = -lay.swap_sign;
            lay.legs.push_back(u0 ? std::array<int, 2>{e[1], e[0]}
                                  : std::array<int, 2>{e[0], e[1]});
            numeric_seq.push_back(u0 ? e[1] : e[0]);
        }
    }

    std::vector<int> triple_seq;
    for (const auto& t : d.triples)
        for (int f : t) triple_seq.push_back(f);
    lay.wedge_sign =
        triple_seq.empty() ? 1 : permutation_parity(numeric_seq, triple_seq);
    return lay;
}

} // namespace

int orientation_sign(const JacobiDiagram& d) {
    EdgeLayout lay = analyze(d);
    return lay.swap_sign * lay.wedge_sign;
}

ExteriorElement phi_evaluate_slots(const JacobiDiagram& d,
                                   const std::vector<CubicTensor>& slots,
                                   const SymplecticSpace& sp) {
    const int k = d.trivalent_count();
    if (static_cast<int>(slots.size()) != k)
        throw BidegreeMismatch("need one cubic slot per trivalent vertex");
    for (const auto& s : slots) {
        if (s.summands.empty()) return {}; // multilinear: a zero slot kills the value
        for (const auto& sm : s.summands)
            if (static_cast<int>(sm.w.size()) != sp.dim())
                throw BidegreeMismatch("cubic vector dimension does not match the space");
    }

    EdgeLayout lay = analyze(d);
    const int orientation = lay.swap_sign * lay.wedge_sign;
    auto vertex = flag_vertex_map(d);

    ExteriorElement two_sigma = Rational(2) * ExteriorElement::sigma_form(sp);

    ExteriorElement result;
    // Iterate over one summand choice per trivalent slot.
    std::vector<std::size_t> choice(k, 0);
    while (true) {
        // Auxiliary part: product a_{s_1} ... a_{s_k} in triple order.
        ExteriorElement aux_el = ExteriorElement::scalar(Rational(1));
        bool aux_zero = false;
        for (int i = 0; i < k && !aux_zero; ++i) {
            aux_el = aux_el.wedge(
                ExteriorElement::aux_generator(slots[i].summands[choice[i]].aux));
            aux_zero = aux_el.is_zero();
        }
        if (!aux_zero) {
            auto w_of = [&](int flag) -> const std::vector<Rational>& {
                return slots[vertex[flag]].summands[choice[vertex[flag]]].w;
            };
            Rational scalar(orientation);
            for (const auto& e : lay.tt) {
                scalar *= sp.sigma(w_of(e[0]), w_of(e[1]));
                if (scalar == 0) break;
            }
            if (scalar != 0) {
                ExteriorElement form = ExteriorElement::scalar(scalar);
                for (const auto& leg : lay.legs) {
                    form = form.wedge(ExteriorElement::flat(sp, w_of(leg[0])));
                    if (form.is_zero()) break;
                }
                for (int s = 0; s < lay.strut_count && !form.is_zero(); ++s)
                    form = form.wedge(two_sigma);
                result += form.wedge(aux_el);
            }
        }

        // Next choice tuple.
        int pos = k - 1;
        while (pos >= 0 && choice[pos] + 1 >= slots[pos].summands.size()) {
            choice[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++choice[pos];
    }
    return result;
}

ExteriorElement phi_evaluate(const JacobiDiagram& d, const CubicTensor& cubic,
                             const SymplecticSpace& sp) {
    std::vector<CubicTensor> slots(d.trivalent_count(), cubic);
    return phi_evaluate_slots(d, slots, sp);
}

std::vector<JacobiDiagram> partial_labelled(const JacobiDiagram& d) {
    if (!is_in_B_prime(d))
        throw StrutPresent("partial is undefined on diagrams with strut components");
    std::vector<JacobiDiagram> out;
    const auto& uni = d.univalent;
    for (std::size_t i = 0; i < uni.size(); ++i)
        for (std::size_t j = i + 1; j < uni.size(); ++j)
            out.push_back(glue_univalent(d, uni[i], uni[j]));
    return out;
}

CubicTensor random_cubic(const SymplecticSpace& sp, int aux_gens, int summands, Rng& rng) {
    CubicTensor c;
    for (int s = 0; s < summands; ++s) {
        CubicTensor::Summand sm;
        sm.w.resize(sp.dim());
        for (int i = 0; i < sp.dim(); ++i) sm.w[i] = Rational(rng.uniform(-3, 3));
        sm.aux = static_cast<int>(rng.uniform(1, aux_gens));
        c.summands.push_back(std::move(sm));
    }
    return c;
}

Prop312Report prop312_check(const JacobiDiagram& d, const SymplecticSpace& sp,
                            int aux_gens, int trials, std::uint64_t seed) {
    if (!is_in_B_prime(d))
        throw StrutPresent("prop312_check requires a strut-free diagram");
    if (d.univalent_count() < 2)
        throw BidegreeMismatch("prop312_check needs at least two univalent vertices");
    if (trials < 1) throw RangeError("trials must be >= 1");
    if (aux_gens < 1) throw RangeError("need at least one auxiliary generator");

    Prop312Report rep;
    rep.diagram = diagram_literal(d);
    rep.n = sp.n;
    rep.gens = aux_gens;
    rep.trials = trials;
    rep.seed = seed;

    const int k = d.trivalent_count();
    std::vector<JacobiDiagram> glued = partial_labelled(d);

    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        int nsum = k + static_cast<int>(rng.uniform(0, 2));
        CubicTensor cubic = random_cubic(sp, aux_gens, nsum, rng);

        ExteriorElement lhs;
        for (const auto& g : glued) lhs += phi_evaluate(g, cubic, sp);
        ExteriorElement rhs = contract_delta(phi_evaluate(d, cubic, sp), sp);

        if (!(lhs == rhs)) {
            ++rep.failures;
            if (rep.witness.empty())
                rep.witness = "trial " + std::to_string(t) + ": lhs = " + lhs.str() +
                              "; rhs = " + rhs.str();
        }
    }
    return rep;
}

} // namespace hk
