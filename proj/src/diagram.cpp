#include "hk/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace hk {

namespace {

// Parity of a 3-sequence with distinct entries: +1 for an even permutation
// of the sorted order (cyclic rotations), -1 otherwise.
int parity3(int x, int y, int z) {
    if ((x < y && y < z) || (y < z && z < x) || (z < x && x < y)) return 1;
    return -1;
}

} // namespace

JacobiDiagram build_diagram(int num_flags,
                            std::vector<std::array<int, 2>> edges,
                            std::vector<std::array<int, 3>> triples,
                            std::vector<int> univalent) {
    if (num_flags < 0 || num_flags % 2 != 0)
        throw MalformedDiagram("flag count must be even and nonnegative");
    if (static_cast<int>(2 * edges.size()) != num_flags)
        throw MalformedDiagram("edge count inconsistent with flag count");
    if (static_cast<int>(3 * triples.size() + univalent.size()) != num_flags)
        throw MalformedDiagram("vertex flags inconsistent with flag count");

    std::vector<int> edge_seen(num_flags + 1, 0), vertex_seen(num_flags + 1, 0);
    auto check_flag = [&](int f) {
        if (f < 1 || f > num_flags) throw MalformedDiagram("flag out of range");
    };
    for (const auto& e : edges) {
        check_flag(e[0]);
        check_flag(e[1]);
        if (e[0] == e[1]) throw MalformedDiagram("edge joins a flag to itself");
        if (edge_seen[e[0]]++ || edge_seen[e[1]]++)
            throw MalformedDiagram("flag appears in two edges");
    }
    for (const auto& t : triples)
        for (int f : t) {
            check_flag(f);
            if (vertex_seen[f]++) throw MalformedDiagram("flag appears in two vertices");
        }
    for (int f : univalent) {
        check_flag(f);
        if (vertex_seen[f]++) throw MalformedDiagram("flag appears in two vertices");
    }
    for (int f = 1; f <= num_flags; ++f) {
        if (!edge_seen[f]) throw MalformedDiagram("flag missing from the edge matching");
        if (!vertex_seen[f]) throw MalformedDiagram("flag missing from the vertex partition");
    }

    JacobiDiagram d;
    d.num_flags = num_flags;
    d.edges = std::move(edges);
    d.triples = std::move(triples);
    d.univalent = std::move(univalent);
    return d;
}

JacobiDiagram empty_diagram() { return build_diagram(0, {}, {}, {}); }

JacobiDiagram strut() { return build_diagram(2, {{1, 2}}, {}, {1, 2}); }

JacobiDiagram theta() {
    return build_diagram(6, {{1, 2}, {3, 4}, {5, 6}}, {{1, 3, 5}, {2, 6, 4}}, {});
}

JacobiDiagram wheel(int k) {
    if (k < 1) throw MalformedDiagram("wheel index must be >= 1");
    const int n = 8 * k;
    std::vector<std::array<int, 2>> edges;
    for (int j = 1; j <= 4 * k; ++j) edges.push_back({2 * j - 1, 2 * j});
    std::vector<std::array<int, 3>> triples;
    triples.push_back({1, 4 * k + 1, 8 * k});
    for (int i = 2; i <= 2 * k; ++i)
        triples.push_back({2 * i - 1, 4 * k + 2 * i - 1, 4 * k + 2 * i - 2});
    std::vector<int> univalent;
    for (int i = 1; i <= 2 * k; ++i) univalent.push_back(2 * i);
    return build_diagram(n, std::move(edges), std::move(triples), std::move(univalent));
}

JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b) {
    JacobiDiagram d = a;
    const int off = a.num_flags;
    d.num_flags += b.num_flags;
    for (const auto& e : b.edges) d.edges.push_back({e[0] + off, e[1] + off});
    for (const auto& t : b.triples) d.triples.push_back({t[0] + off, t[1] + off, t[2] + off});
    for (int u : b.univalent) d.univalent.push_back(u + off);
    return d;
}

std::vector<int> flag_partner_map(const JacobiDiagram& d) {
    std::vector<int> partner(d.num_flags + 1, 0);
    for (const auto& e : d.edges) {
        partner[e[0]] = e[1];
        partner[e[1]] = e[0];
    }
    return partner;
}

std::vector<int> flag_vertex_map(const JacobiDiagram& d) {
    std::vector<int> vertex(d.num_flags + 1, -1);
    for (int i = 0; i < d.trivalent_count(); ++i)
        for (int f : d.triples[i]) vertex[f] = i;
    for (int j = 0; j < d.univalent_count(); ++j)
        vertex[d.univalent[j]] = d.trivalent_count() + j;
    return vertex;
}

std::vector<JacobiDiagram> connected_components(const JacobiDiagram& d) {
    const int n = d.num_flags;
    std::vector<int> comp(n + 1, -1);
    auto partner = flag_partner_map(d);
    auto vertex = flag_vertex_map(d);

    std::vector<std::vector<int>> vertex_flags(d.degree());
    for (int i = 0; i < d.trivalent_count(); ++i)
        vertex_flags[i] = {d.triples[i][0], d.triples[i][1], d.triples[i][2]};
    for (int j = 0; j < d.univalent_count(); ++j)
        vertex_flags[d.trivalent_count() + j] = {d.univalent[j]};

    int ncomp = 0;
    for (int f0 = 1; f0 <= n; ++f0) {
        if (comp[f0] >= 0) continue;
        std::vector<int> stack = {f0};
        comp[f0] = ncomp;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int g : vertex_flags[vertex[f]])
                if (comp[g] < 0) {
                    comp[g] = ncomp;
                    stack.push_back(g);
                }
            if (comp[partner[f]] < 0) {
                comp[partner[f]] = ncomp;
                stack.push_back(partner[f]);
            }
        }
        ++ncomp;
    }

    // Renumber each component's flags, preserving relative order.
    std::vector<std::vector<int>> newlabel(ncomp, std::vector<int>(n + 1, 0));
    std::vector<int> counts(ncomp, 0);
    for (int f = 1; f <= n; ++f) newlabel[comp[f]][f] = ++counts[comp[f]];

    std::vector<JacobiDiagram> out(ncomp);
    for (int c = 0; c < ncomp; ++c) out[c].num_flags = counts[c];
    for (const auto& e : d.edges) {
        int c = comp[e[0]];
        out[c].edges.push_back({newlabel[c][e[0]], newlabel[c][e[1]]});
    }
    for (const auto& t : d.triples) {
        int c = comp[t[0]];
        out[c].triples.push_back({newlabel[c][t[0]], newlabel[c][t[1]], newlabel[c][t[2]]});
    }
    for (int u : d.univalent) out[comp[u]].univalent.push_back(newlabel[comp[u]][u]);
    return out;
}

bool is_in_B_prime(const JacobiDiagram& d) {
    for (const auto& c : connected_components(d))
        if (c.num_flags == 2 && c.univalent_count() == 2) return false;
    return true;
}

JacobiDiagram glue_univalent(const JacobiDiagram& d, int u, int v) {
    if (u == v) throw MalformedDiagram("cannot glue a univalent vertex to itself");
    auto is_uni = [&](int f) {
        return std::find(d.univalent.begin(), d.univalent.end(), f) != d.univalent.end();
    };
    if (!is_uni(u) || !is_uni(v)) throw MalformedDiagram("glue targets must be univalent flags");
    auto partner = flag_partner_map(d);
    const int p = partner[u], q = partner[v];
    if (p == v) throw StrutPresent("gluing the two ends of a strut yields a circle");

    std::vector<int> relabel(d.num_flags + 1, 0);
    int next = 0;
    for (int f = 1; f <= d.num_flags; ++f)
        if (f != u && f != v) relabel[f] = ++next;

    JacobiDiagram g;
    g.num_flags = d.num_flags - 2;
    for (const auto& e : d.edges) {
        if (e[0] == u || e[1] == u || e[0] == v || e[1] == v) continue;
        g.edges.push_back({relabel[e[0]], relabel[e[1]]});
    }
    g.edges.push_back({relabel[p], relabel[q]});
    for (const auto& t : d.triples)
        g.triples.push_back({relabel[t[0]], relabel[t[1]], relabel[t[2]]});
    for (int f : d.univalent)
        if (f != u && f != v) g.univalent.push_back(relabel[f]);
    return g;
}

// ---------------------------------------------------------------------------
// Canonicalization.
//
// The canonical form of a connected component is the lexicographically
// minimal "placement code" over all vertex orderings and cyclic rotations.
// Vertices are placed trivalent-first; after the first trivalent vertex the
// next one must be adjacent to an already placed one (an isomorphism-
// equivariant restriction that tames symmetric diagrams). Flags receive
// labels in placement order, and each flag contributes one code entry: its
// partner's label if already assigned, else 0. The code determines the
// matching, so equal codes mean equal labelled diagrams.
//
// The relabeling sign is the product over triples of the parity of the
// image sequence; leaves achieving the minimal code are enumerated, and a
// disagreement among their signs marks the diagram as AS-degenerate.
// ---------------------------------------------------------------------------

namespace {

struct ComponentResult {
    std::string code;
    int sign = 1; // 0 when AS-degenerate
};

class ComponentCanonicalizer {
  public:
    explicit ComponentCanonicalizer(const JacobiDiagram& d)
        : d_(d), k_(d.trivalent_count()), l_(d.univalent_count()),
          partner_(flag_partner_map(d)) {
        label_.assign(d_.num_flags + 1, 0);
        triple_placed_.assign(k_, false);
        uni_placed_.assign(l_, false);
        // Trivalent-trivalent adjacency.
        auto vertex = flag_vertex_map(d_);
        adj_.assign(k_, {});
        for (const auto& e : d_.edges) {
            int a = vertex[e[0]], b = vertex[e[1]];
            if (a < k_ && b < k_ && a != b) {
                adj_[a].push_back(b);
                adj_[b].push_back(a);
            }
        }
    }

    ComponentResult run() {
        code_.clear();
        best_.clear();
        seen_plus_ = seen_minus_ = false;
        dfs(0, 0);
        ComponentResult r;
        r.code.push_back(static_cast<char>(k_));
        r.code.push_back(static_cast<char>(l_));
        r.code.append(best_.begin(), best_.end());
        r.sign = (seen_plus_ && seen_minus_) ? 0 : (seen_plus_ ? 1 : -1);
        return r;
    }

  private:
    using Entries = std::vector<std::uint8_t>;

    void dfs(int placed_triples, int placed_unis) {
        const std::size_t depth = code_.size();
        if (placed_triples == k_ && placed_unis == l_) {
            if (!has_best_ || code_ < best_) {
                best_ = code_;
                has_best_ = true;
                seen_plus_ = seen_minus_ = false;
                record_sign();
            } else if (code_ == best_) {
                record_sign();
            }
            return;
        }

        struct Move {
            Entries entries;
            int index;
            int rotation;
        };
        std::vector<Move> moves;

        if (placed_triples < k_) {
            bool any_placed = placed_triples > 0;
            std::vector<char> allowed(k_, !any_placed);
            if (any_placed) {
                bool found = false;
                for (int t = 0; t < k_; ++t) {
                    if (triple_placed_[t]) continue;
                    for (int nb : adj_[t])
                        if (triple_placed_[nb]) {
                            allowed[t] = true;
                            found = true;
                            break;
                        }
                }
                if (!found)
                    for (int t = 0; t < k_; ++t) allowed[t] = !triple_placed_[t];
            }
            for (int t = 0; t < k_; ++t) {
                if (triple_placed_[t] || !allowed[t]) continue;
                for (int r = 0; r < 6; ++r)
                    moves.push_back({triple_entries(t, r), t, r});
            }
        } else {
            for (int ui = 0; ui < l_; ++ui) {
                if (uni_placed_[ui]) continue;
                int f = d_.univalent[ui];
                Entries e = {static_cast<std::uint8_t>(label_[partner_[f]])};
                moves.push_back({std::move(e), ui, 0});
            }
        }

        std::stable_sort(moves.begin(), moves.end(),
                         [](const Move& a, const Move& b) { return a.entries < b.entries; });

        for (const auto& m : moves) {
            // Prune against the incumbent only while the placed prefix still
            // matches it; a strictly smaller prefix must be explored freely.
            // Recomputed per move because a child can update the incumbent.
            if (has_best_ &&
                std::equal(code_.begin(), code_.end(), best_.begin()) &&
                prefix_worse(m.entries, depth))
                break;
            apply(m.index, m.rotation, placed_triples < k_, m.entries);
            dfs(placed_triples + (placed_triples < k_ ? 1 : 0),
                placed_unis + (placed_triples < k_ ? 0 : 1));
            undo(m.index, m.rotation, placed_triples < k_, m.entries.size());
        }
    }

    // All 6 orderings: the canonical form is of the underlying graph, and the
    // relabeling sign absorbs the orientation comparison.
    static constexpr int kOrderings[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};

    // Entries the triple would contribute if placed now with ordering r.
    Entries triple_entries(int t, int r) {
        const auto& tri = d_.triples[t];
        int base = next_label_;
        int flags[3] = {tri[kOrderings[r][0]], tri[kOrderings[r][1]], tri[kOrderings[r][2]]};
        Entries e(3);
        for (int i = 0; i < 3; ++i) {
            int pf = partner_[flags[i]];
            int lab = label_[pf];
            // A tadpole partner inside this very placement.
            if (lab == 0)
                for (int j = 0; j < i; ++j)
                    if (flags[j] == pf) lab = base + j;
            e[i] = static_cast<std::uint8_t>(lab);
        }
        return e;
    }

    bool prefix_worse(const Entries& e, std::size_t depth) const {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (depth + i >= best_.size()) return false;
            if (e[i] != best_[depth + i]) return e[i] > best_[depth + i];
        }
        return false;
    }

    void apply(int index, int rotation, bool is_triple, const Entries& entries) {
        if (is_triple) {
            const auto& tri = d_.triples[index];
            for (int i = 0; i < 3; ++i) label_[tri[kOrderings[rotation][i]]] = next_label_++;
            triple_placed_[index] = true;
        } else {
            label_[d_.univalent[index]] = next_label_++;
            uni_placed_[index] = true;
        }
        code_.insert(code_.end(), entries.begin(), entries.end());
    }

    void undo(int index, int rotation, bool is_triple, std::size_t entry_count) {
        if (is_triple) {
            const auto& tri = d_.triples[index];
            for (int i = 0; i < 3; ++i) label_[tri[kOrderings[rotation][i]]] = 0;
            next_label_ -= 3;
            triple_placed_[index] = false;
        } else {
            label_[d_.univalent[index]] = 0;
            --next_label_;
            uni_placed_[index] = false;
        }
        code_.resize(code_.size() - entry_count);
    }

    void record_sign() {
        int s = 1;
        for (const auto& tri : d_.triples)
            s *= parity3(label_[tri[0]], label_[tri[1]], label_[tri[2]]);
        (s > 0 ? seen_plus_ : seen_minus_) = true;
    }

    const JacobiDiagram& d_;
    int k_, l_;
    std::vector<int> partner_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> label_;
    std::vector<char> triple_placed_, uni_placed_;
    int next_label_ = 1;
    Entries code_, best_;
    bool has_best_ = false;
    bool seen_plus_ = false, seen_minus_ = false;
};

} // namespace

CanonicalForm canonicalize(const JacobiDiagram& d) {
    auto comps = connected_components(d);
    std::vector<std::string> codes;
    int sign = 1;
    for (const auto& c : comps) {
        ComponentResult r = ComponentCanonicalizer(c).run();
        sign *= r.sign;
        codes.push_back(std::move(r.code));
    }
    std::sort(codes.begin(), codes.end());
    CanonicalForm cf;
    for (const auto& c : codes) cf.key += c;
    cf.sign = sign;
    return cf;
}

JacobiDiagram canonical_decode(const std::string& key) {
    JacobiDiagram total = empty_diagram();
    std::size_t pos = 0;
    while (pos < key.size()) {
        int k = static_cast<std::uint8_t>(key[pos]);
        int l = static_cast<std::uint8_t>(key[pos + 1]);
        const int nf = 3 * k + l;
        if (pos + 2 + nf > key.size())
            throw MalformedDiagram("truncated canonical key");
        JacobiDiagram c;
        c.num_flags = nf;
        for (int i = 0; i < k; ++i) c.triples.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
        for (int j = 0; j < l; ++j) c.univalent.push_back(3 * k + j + 1);
        for (int f = 1; f <= nf; ++f) {
            int e = static_cast<std::uint8_t>(key[pos + 1 + f]);
            if (e > 0) c.edges.push_back({e, f});
        }
        if (static_cast<int>(2 * c.edges.size()) != nf)
            throw MalformedDiagram("canonical key does not encode a perfect matching");
        total = disjoint_union(total, c);
        pos += 2 + nf;
    }
    return total;
}

std::string key_description(const std::string& key) {
    std::ostringstream os;
    std::size_t pos = 0;
    bool first = true;
    while (pos < key.size()) {
        int k = static_cast<std::uint8_t>(key[pos]);
        int l = static_cast<std::uint8_t>(key[pos + 1]);
        if (!first) os << " u ";
        first = false;
        os << "(" << k << "," << l << ")[";
        for (int f = 1; f <= 3 * k + l; ++f) {
            if (f > 1) os << " ";
            os << static_cast<int>(static_cast<std::uint8_t>(key[pos + 1 + f]));
        }
        os << "]";
        pos += 2 + 3 * k + l;
    }
    if (first) os << "1";
    return os.str();
}

JacobiDiagram parse_diagram_literal(const std::string& text) {
    // Grammar: flags=N; edges=(a b)(c d)...; tri=(p q r)...; uni=(u)(v)...
    // Whitespace-insensitive except as a separator between flag numbers.
    auto trim = [](std::string v) {
        while (!v.empty() && isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
        while (!v.empty() && isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
        return v;
    };
    std::map<std::string, std::string> fields;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        std::string seg = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        auto eq = seg.find('=');
        if (eq != std::string::npos)
            fields[trim(seg.substr(0, eq))] = trim(seg.substr(eq + 1));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    auto field = [&](const std::string& name) -> std::string {
        auto it = fields.find(name);
        return it == fields.end() ? "" : it->second;
    };

    auto parse_groups = [](const std::string& body) {
        std::vector<std::vector<int>> groups;
        std::size_t i = 0;
        while (i < body.size()) {
            if (body[i] != '(') throw MalformedDiagram("expected '(' in diagram literal");
            auto close = body.find(')', i);
            if (close == std::string::npos)
                throw MalformedDiagram("unbalanced parenthesis in diagram literal");
            std::vector<int> g;
            std::string num;
            for (std::size_t j = i + 1; j <= close; ++j) {
                if (j == close || body[j] == ',') {
                    if (!num.empty()) g.push_back(std::stoi(num));
                    num.clear();
                } else if (isdigit(static_cast<unsigned char>(body[j]))) {
                    num.push_back(body[j]);
                } else {
                    if (!num.empty()) g.push_back(std::stoi(num));
                    num.clear();
                }
            }
            groups.push_back(std::move(g));
            i = close + 1;
        }
        return groups;
    };

    std::string nf = field("flags");
    if (nf.empty()) throw MalformedDiagram("missing flags=N in diagram literal");
    int num_flags = std::stoi(nf);

    std::vector<std::array<int, 2>> edges;
    for (const auto& g : parse_groups(field("edges"))) {
        if (g.size() != 2) throw MalformedDiagram("edge group must have 2 flags");
        edges.push_back({g[0], g[1]});
    }
    std::vector<std::array<int, 3>> triples;
    for (const auto& g : parse_groups(field("tri"))) {
        if (g.size() != 3) throw MalformedDiagram("tri group must have 3 flags");
        triples.push_back({g[0], g[1], g[2]});
    }
    std::vector<int> univalent;
    for (const auto& g : parse_groups(field("uni"))) {
        if (g.size() != 1) throw MalformedDiagram("uni group must have 1 flag");
        univalent.push_back(g[0]);
    }
    return build_diagram(num_flags, std::move(edges), std::move(triples), std::move(univalent));
}

std::string diagram_literal(const JacobiDiagram& d) {
    std::ostringstream os;
    os << "flags=" << d.num_flags << "; edges=";
    for (const auto& e : d.edges) os << "(" << e[0] << " " << e[1] << ")";
    os << "; tri=";
    for (const auto& t : d.triples) os << "(" << t[0] << " " << t[1] << " " << t[2] << ")";
    os << "; uni=";
    for (int u : d.univalent) os << "(" << u << ")";
    return os.str();
}

} // namespace hk
