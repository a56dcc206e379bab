#ifndef HK_DIAGRAM_HPP
#define HK_DIAGRAM_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hk/errors.hpp"

namespace hk {

// A Jacobi diagram on flags 1..num_flags. Edges form a perfect matching on
// the flags; vertices partition the flags into ordered triples (the listed
// order, up to cyclic rotation, is the vertex orientation) and univalent
// singletons.
struct JacobiDiagram {
    int num_flags = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triples;
    std::vector<int> univalent;

    int trivalent_count() const { return static_cast<int>(triples.size()); }
    int univalent_count() const { return static_cast<int>(univalent.size()); }
    std::pair<int, int> bidegree() const { return {trivalent_count(), univalent_count()}; }
    int degree() const { return trivalent_count() + univalent_count(); }
};

// Validates the partition invariants and returns the diagram.
// Throws MalformedDiagram on any violation.
JacobiDiagram build_diagram(int num_flags,
                            std::vector<std::array<int, 2>> edges,
                            std::vector<std::array<int, 3>> triples,
                            std::vector<int> univalent);

JacobiDiagram empty_diagram();
JacobiDiagram strut();

// Two trivalent vertices joined by three edges. The stored orientation is
// the one with partial(w_2) = +theta, i.e. the two cyclic orders read the
// three edges in opposite senses (the planar form).
JacobiDiagram theta();

// The 2k-wheel with the explicit flag labelling of the standard picture:
// flags 1..8k, edge j = {2j-1, 2j}, univalent flags {2, 4, ..., 4k}.
JacobiDiagram wheel(int k);

JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b);

// partner[f] = the flag sharing an edge with f (1-based, index 0 unused).
std::vector<int> flag_partner_map(const JacobiDiagram& d);

// vertex id per flag: triples are 0..k-1, univalent k..k+l-1 (1-based flags).
std::vector<int> flag_vertex_map(const JacobiDiagram& d);

std::vector<JacobiDiagram> connected_components(const JacobiDiagram& d);

// True iff no connected component is a strut.
bool is_in_B_prime(const JacobiDiagram& d);

// Removes the univalent vertices carrying flags u and v and joins their
// edge partners by a new edge (appended last). Trivalent orientations are
// inherited unchanged; remaining flags are renumbered preserving order.
JacobiDiagram glue_univalent(const JacobiDiagram& d, int u, int v);

// Canonical form of the isomorphism class. Two diagrams get equal keys iff
// they are related by a flag relabeling preserving edges, the vertex
// partition, and cyclic orders up to rotation. The sign relates the input's
// orientation to the canonical representative; it is 0 exactly when the
// diagram admits an orientation-reversing automorphism (AS-degenerate).
struct CanonicalForm {
    std::string key;
    int sign = 1;
};

CanonicalForm canonicalize(const JacobiDiagram& d);

// Rebuilds the canonical representative from its key. Decoding then
// canonicalizing again yields the same key with sign +1.
JacobiDiagram canonical_decode(const std::string& key);

// Human-readable key rendering for reports and error messages.
std::string key_description(const std::string& key);

// Literal format: `flags=N; edges=(a b)(c d)...; tri=(p q r)...; uni=(u)...`
JacobiDiagram parse_diagram_literal(const std::string& text);
std::string diagram_literal(const JacobiDiagram& d);

} // namespace hk

#endif
