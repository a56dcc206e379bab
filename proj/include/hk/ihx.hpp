#ifndef HK_IHX_HPP
#define HK_IHX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hk/graph_vector.hpp"

namespace hk {

// Indices of edges joining two distinct trivalent vertices.
std::vector<int> admissible_ihx_edges(const JacobiDiagram& d);

// The relation I - H + X at the given edge. With the edge flags rotated
// first, u = (x,a,b) and v = (y,c,d); then H has u -> (x,b,c), v -> (y,d,a)
// and X has u -> (x,c,a), v -> (y,b,d).
GraphVector ihx_relation(const JacobiDiagram& d, int edge_index);

// Span of IHX relations generated from seed diagrams of one bidegree,
// closed under one-step expansion at every admissible edge and iterated to
// a fixed point, with the relation matrix kept in echelon form.
class QuotientContext {
  public:
    QuotientContext(std::pair<int, int> bidegree) : bidegree_(bidegree) {}

    std::pair<int, int> bidegree() const { return bidegree_; }
    const std::vector<std::string>& basis() const { return basis_; }
    std::size_t basis_size() const { return basis_.size(); }
    int relation_rank() const { return static_cast<int>(rows_.size()); }

    friend QuotientContext build_quotient(std::pair<int, int> bidegree,
                                          const std::vector<JacobiDiagram>& seeds);
    friend bool is_zero_mod_relations(const GraphVector& g, const QuotientContext& ctx);

  private:
    std::pair<int, int> bidegree_;
    std::vector<std::string> basis_;      // sorted canonical keys
    std::map<std::string, int> index_;    // key -> column
    std::vector<std::vector<Rational>> rows_; // echelon rows, monic pivots
    std::vector<int> pivots_;             // pivot column per row, increasing
};

QuotientContext build_quotient(std::pair<int, int> bidegree,
                               const std::vector<JacobiDiagram>& seeds);

// Convenience: seeds taken from the support of a vector.
QuotientContext build_quotient_from(const GraphVector& v);

// True iff g lies in the IHX relation span. Throws ContextIncomplete when
// the support of g escapes the context's basis.
bool is_zero_mod_relations(const GraphVector& g, const QuotientContext& ctx);

struct WheelingDegreeReport {
    int degree = 0; // 2k
    std::size_t basis_size = 0;
    int relation_rank = 0;
    bool reduced_norm_zero = false;
    std::int64_t elapsed_ms = 0;
};

struct WheelingReport {
    int max_degree = 0;
    bool all_pass = true;
    std::vector<WheelingDegreeReport> degrees;
};

// Verifies partial(Omega_{2k}) - (Theta/48) Omega_{2k-2} = 0 modulo the
// generated relations for each 2k with 4k <= max_degree (total vertices of
// the homogeneous piece).
WheelingReport wheeling_check(int max_degree);

} // namespace hk

#endif
