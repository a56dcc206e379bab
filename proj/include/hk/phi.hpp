#ifndef HK_PHI_HPP
#define HK_PHI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hk/diagram.hpp"
#include "hk/exterior.hpp"

namespace hk {

// Element of Sym^3 V tensor A_1 in split form: sum of w^3 tensor a_j.
struct CubicTensor {
    struct Summand {
        std::vector<Rational> w; // coordinates in e_1..e_2n (0-based storage)
        int aux = 1;             // auxiliary generator index, 1-based
    };
    std::vector<Summand> summands;
};

// Permutation sign relating the edge-ordered flag sequence (univalent flags
// excluded, strut edges skipped) to the trivalent-triple-ordered sequence,
// times -1 for every within-edge swap needed to put a univalent flag of a
// non-strut component into the second slot of its edge.
int orientation_sign(const JacobiDiagram& d);

// Contraction of the diagram's tensor slots along edges by sigma, with the
// orientation-compatible sign. Trivalent slot i is fed slots[i]; univalent
// slots are fed id_V = sum_m e_m tensor theta^m.
ExteriorElement phi_evaluate_slots(const JacobiDiagram& d,
                                   const std::vector<CubicTensor>& slots,
                                   const SymplecticSpace& sp);

// All trivalent slots fed the same cubic element, as in RW_{sigma,alpha}.
ExteriorElement phi_evaluate(const JacobiDiagram& d, const CubicTensor& cubic,
                             const SymplecticSpace& sp);

// The labelled gluings entering Phi^{partial Gamma}: one diagram per
// unordered pair of univalent vertices, triples inherited unchanged.
std::vector<JacobiDiagram> partial_labelled(const JacobiDiagram& d);

struct Prop312Report {
    std::string diagram;
    int n = 0;
    int gens = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int failures = 0;
    std::string witness;
    bool pass() const { return failures == 0; }
};

// Verifies Phi^{partial Gamma}(beta tensor id^{l-2}) =
// delta(Phi^Gamma(beta tensor id^l)) on random split beta.
Prop312Report prop312_check(const JacobiDiagram& d, const SymplecticSpace& sp,
                            int aux_gens, int trials, std::uint64_t seed);

// Random split cubic element with entries in {-3..3}.
CubicTensor random_cubic(const SymplecticSpace& sp, int aux_gens, int summands, Rng& rng);

} // namespace hk

#endif
