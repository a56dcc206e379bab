#ifndef HK_GRAPH_VECTOR_HPP
#define HK_GRAPH_VECTOR_HPP

#include <map>
#include <string>
#include <vector>

#include "hk/diagram.hpp"
#include "hk/rational.hpp"

namespace hk {

// Formal Q-linear combination of canonical Jacobi diagrams. AS is
// internalized: terms are stored against canonical keys with the
// representative's orientation, and AS-degenerate diagrams are dropped.
class GraphVector {
  public:
    GraphVector() = default;

    static GraphVector unit() { return single(empty_diagram()); }
    static GraphVector single(const JacobiDiagram& d, const Rational& c = Rational(1));

    void add_term(const JacobiDiagram& d, const Rational& c);
    void add_key(const std::string& key, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::string, Rational>& terms() const { return terms_; }

    GraphVector& operator+=(const GraphVector& o);
    GraphVector& operator-=(const GraphVector& o);
    friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
    friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
    friend GraphVector operator*(const Rational& s, const GraphVector& g);
    friend bool operator==(const GraphVector& a, const GraphVector& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::map<std::string, Rational> terms_;
};

// Disjoint-union product, bilinear over the stored terms.
GraphVector product(const GraphVector& a, const GraphVector& b);

// Sum over all gluings of two univalent vertices, per diagram. Requires
// every term to be strut-free; throws StrutPresent otherwise.
GraphVector differential(const GraphVector& g);

// Truncation of Omega = exp(sum b_{2k} w_{2k}) to wheel-weight <= max_weight,
// where the 4k-degree piece Omega_{2k} carries wheel weight k.
GraphVector wheeling_element(int max_weight);

// Homogeneous piece Omega_{2k} alone (wheel weight k).
GraphVector wheeling_piece(int k);

} // namespace hk

#endif
