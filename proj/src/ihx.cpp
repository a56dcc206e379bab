#include "hk/ihx.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>

namespace hk {

std::vector<int> admissible_ihx_edges(const JacobiDiagram& d) {
    auto vertex = flag_vertex_map(d);
    const int k = d.trivalent_count();
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(d.edges.size()); ++i) {
        int a = vertex[d.edges[i][0]], b = vertex[d.edges[i][1]];
        if (a < k && b < k && a != b) out.push_back(i);
    }
    return out;
}

namespace {

// Rotate the triple so that `flag` comes first.
std::array<int, 3> rotate_first(const std::array<int, 3>& t, int flag) {
    for (int r = 0; r < 3; ++r)
        if (t[r] == flag) return {t[r], t[(r + 1) % 3], t[(r + 2) % 3]};
    throw MalformedDiagram("flag not in triple");
}

} // namespace

GraphVector ihx_relation(const JacobiDiagram& d, int edge_index) {
    const auto& e = d.edges.at(edge_index);
    auto vertex = flag_vertex_map(d);
    const int ui = vertex[e[0]], vi = vertex[e[1]];
    if (ui >= d.trivalent_count() || vi >= d.trivalent_count() || ui == vi)
        throw MalformedDiagram("IHX requires an edge joining two distinct trivalent vertices");

    auto u = rotate_first(d.triples[ui], e[0]); // (x, a, b)
    auto v = rotate_first(d.triples[vi], e[1]); // (y, c, d)
    const int x = u[0], a = u[1], b = u[2];
    const int y = v[0], c = v[1], dd = v[2];

    JacobiDiagram H = d;
    H.triples[ui] = {x, b, c};
    H.triples[vi] = {y, dd, a};

    JacobiDiagram X = d;
    X.triples[ui] = {x, c, a};
    X.triples[vi] = {y, b, dd};

    GraphVector r;
    r.add_term(d, Rational(1));
    r.add_term(H, Rational(-1));
    r.add_term(X, Rational(1));
    return r;
}

namespace {

// Reduce a dense row against echelon rows with monic pivots.
void reduce_row(std::vector<Rational>& row,
                const std::vector<std::vector<Rational>>& rows,
                const std::vector<int>& pivots) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational& c = row[pivots[r]];
        if (c == 0) continue;
        Rational f = c;
        const auto& src = rows[r];
        for (std::size_t j = pivots[r]; j < row.size(); ++j)
            if (src[j] != 0) row[j] -= f * src[j];
    }
}

} // namespace

QuotientContext build_quotient(std::pair<int, int> bidegree,
                               const std::vector<JacobiDiagram>& seeds) {
    QuotientContext ctx(bidegree);

    // Closure under IHX expansion.
    std::set<std::string> known;
    std::deque<std::string> queue;
    for (const auto& s : seeds) {
        if (s.bidegree() != bidegree)
            throw MalformedDiagram("seed bidegree does not match context");
        CanonicalForm cf = canonicalize(s);
        if (cf.sign == 0) continue;
        if (known.insert(cf.key).second) queue.push_back(cf.key);
    }

    std::vector<std::map<std::string, Rational>> relations;
    while (!queue.empty()) {
        std::string key = queue.front();
        queue.pop_front();
        JacobiDiagram d = canonical_decode(key);
        for (int ei : admissible_ihx_edges(d)) {
            GraphVector rel = ihx_relation(d, ei);
            if (rel.is_zero()) continue;
            relations.push_back(rel.terms());
            for (const auto& [k2, c2] : rel.terms())
                if (known.insert(k2).second) queue.push_back(k2);
        }
    }

    ctx.basis_.assign(known.begin(), known.end());
    std::sort(ctx.basis_.begin(), ctx.basis_.end());
    for (std::size_t i = 0; i < ctx.basis_.size(); ++i)
        ctx.index_[ctx.basis_[i]] = static_cast<int>(i);

    const std::size_t ncol = ctx.basis_.size();
    for (const auto& rel : relations) {
        std::vector<Rational> row(ncol, Rational(0));
        for (const auto& [k2, c2] : rel) row[ctx.index_.at(k2)] = c2;
        reduce_row(row, ctx.rows_, ctx.pivots_);
        int p = -1;
        for (std::size_t j = 0; j < ncol; ++j)
            if (row[j] != 0) {
                p = static_cast<int>(j);
                break;
            }
        if (p < 0) continue;
        Rational lead = row[p];
        for (std::size_t j = p; j < ncol; ++j)
            if (row[j] != 0) row[j] /= lead;
        // Keep rows ordered by pivot column.
        std::size_t at = 0;
        while (at < ctx.pivots_.size() && ctx.pivots_[at] < p) ++at;
        ctx.rows_.insert(ctx.rows_.begin() + at, std::move(row));
        ctx.pivots_.insert(ctx.pivots_.begin() + at, p);
    }
    return ctx;
}

QuotientContext build_quotient_from(const GraphVector& v) {
    std::vector<JacobiDiagram> seeds;
    std::pair<int, int> bidegree{0, 0};
    bool first = true;
    for (const auto& [key, c] : v.terms()) {
        JacobiDiagram d = canonical_decode(key);
        if (first) {
            bidegree = d.bidegree();
            first = false;
        } else if (d.bidegree() != bidegree) {
            throw MalformedDiagram("vector is not homogeneous in bidegree");
        }
        seeds.push_back(std::move(d));
    }
    return build_quotient(bidegree, seeds);
}

bool is_zero_mod_relations(const GraphVector& g, const QuotientContext& ctx) {
    if (g.is_zero()) return true;
    std::vector<Rational> row(ctx.basis_.size(), Rational(0));
    for (const auto& [key, c] : g.terms()) {
        auto it = ctx.index_.find(key);
        if (it == ctx.index_.end())
            throw ContextIncomplete("vector support escapes the quotient context: " +
                                    key_description(key));
        row[it->second] = c;
    }
    reduce_row(row, ctx.rows_, ctx.pivots_);
    for (const auto& c : row)
        if (c != 0) return false;
    return true;
}

WheelingReport wheeling_check(int max_degree) {
    if (max_degree < 2 || max_degree % 2 != 0)
        throw RangeError("max_degree must be even and >= 2");
    WheelingReport report;
    report.max_degree = max_degree;
    GraphVector theta_vec = GraphVector::single(theta());

    for (int k = 1; 4 * k <= max_degree; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        WheelingDegreeReport rec;
        rec.degree = 2 * k;
        GraphVector v = differential(wheeling_piece(k)) -
                        Rational(1, 48) * product(theta_vec, wheeling_piece(k - 1));
        if (v.is_zero()) {
            rec.reduced_norm_zero = true;
        } else {
            QuotientContext ctx = build_quotient_from(v);
            rec.basis_size = ctx.basis_size();
            rec.relation_rank = ctx.relation_rank();
            rec.reduced_norm_zero = is_zero_mod_relations(v, ctx);
        }
        auto t1 = std::chrono::steady_clock::now();
        rec.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        report.all_pass = report.all_pass && rec.reduced_norm_zero;
        report.degrees.push_back(rec);
    }
    return report;
}

} // namespace hk
