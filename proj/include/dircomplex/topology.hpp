/**
 * Contractibility and sphere recognition for graphs, Betti numbers of
 * complexes, and Morse bookkeeping for hyperbolic vertices.
 *
 * Recognition follows the inductive definitions directly:
 *
 *   - K1 is contractible; G is contractible if some vertex x has S(x) and
 *     G - x contractible.
 *   - The empty graph is the (-1)-sphere; G is a d-sphere if every unit
 *     sphere is a (d-1)-sphere and G - x is contractible for some x.
 *
 * The search is exhaustive, so Contractible/Sphere and Other verdicts are
 * exact. Two pruning rules are consequences of the definitions (contractible
 * graphs are connected with chi = 1; d-spheres have chi = 1 + (-1)^d). Results
 * are memoised under a canonical form of the graph. Graphs above
 * max_vertices, or searches that exhaust the budget, give Unknown.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace dircomplex {

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

namespace detail {

/// Colour refinement: repeatedly replace each colour by the rank of
/// (colour, sorted neighbour colours) until the partition stops splitting.
inline std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    const std::size_t n = g.vertex_count();
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::pair<std::vector<int>, VertexId>> sig(n);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            std::vector<int> nb;
            for (VertexId w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int rank = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == 0 || sig[i].first != sig[i - 1].first) ++rank;
            next[sig[i].second] = rank;
        }
        std::size_t now = static_cast<std::size_t>(rank + 1);
        color = std::move(next);
        if (now == classes) return color;
        classes = now;
    }
}

inline std::string adjacency_key(const Graph& g, const std::vector<int>& position, char tag) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> at(n);
    for (VertexId v = 0; v < n; ++v) at[static_cast<std::size_t>(position[v])] = v;
    std::string key(1, tag);
    key += std::to_string(n);
    key += ':';
    unsigned char byte = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            byte = static_cast<unsigned char>((byte << 1) | (g.has_edge(at[i], at[j]) ? 1 : 0));
            if (++filled == 8) {
                key.push_back(static_cast<char>(byte));
                byte = 0;
                filled = 0;
            }
        }
    if (filled) key.push_back(static_cast<char>(byte << (8 - filled)));
    return key;
}

struct CanonicalSearch {
    const Graph& g;
    std::size_t leaf_cap;
    std::size_t leaves = 0;
    std::optional<std::string> best;

    bool run(const std::vector<int>& color) {
        const std::size_t n = g.vertex_count();
        std::vector<std::size_t> count(n, 0);
        for (int c : color) ++count[static_cast<std::size_t>(c)];
        int target = -1;
        for (std::size_t c = 0; c < n; ++c)
            if (count[c] > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            if (++leaves > leaf_cap) return false;
            std::string key = adjacency_key(g, color, 'C');
            if (!best || key < *best) best = std::move(key);
            return true;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> split(n);
            for (VertexId u = 0; u < n; ++u)
                split[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
            if (!run(refine_colors(g, std::move(split)))) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Isomorphism-invariant key by individualisation-refinement. If the search
/// tree has more than leaf_cap leaves, falls back to a key of the labelled
/// graph (tagged differently, so it never collides with a canonical key).
inline std::string canonical_key(const Graph& g, std::size_t leaf_cap = 4096) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n);
    for (VertexId v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(v));
    detail::CanonicalSearch search{g, leaf_cap, 0, std::nullopt};
    if (search.run(detail::refine_colors(g, std::move(color))) && search.best) return *search.best;
    if (n == 0) return "C0:";
    std::vector<int> identity(n);
    for (VertexId v = 0; v < n; ++v) identity[v] = static_cast<int>(v);
    return detail::adjacency_key(g, identity, 'L');
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

enum class Homotopy { contractible, sphere, other, unknown };

struct HomotopyVerdict {
    Homotopy kind = Homotopy::unknown;
    /// Sphere dimension when kind == sphere.
    int dimension = 0;
    /// Top-level certificate: the vertex x with G - x contractible (and, for
    /// contractibility, S(x) contractible).
    std::optional<VertexId> witness;
    std::string note;
};

struct RecognitionOptions {
    /// Cache misses allowed per top-level query.
    std::size_t budget = 200000;
    /// Graphs with more vertices are not searched.
    std::size_t max_vertices = 14;
};

enum class Tri { yes, no, unknown };

/// Memoising recogniser. Safe to share between threads: lookups take a
/// shared lock, inserts an exclusive one, and only exact results are stored.
class Recognizer {
public:
    explicit Recognizer(RecognitionOptions opt = {}) : opt_(opt) {}

    const RecognitionOptions& options() const { return opt_; }

    Tri contractible(const Graph& g, std::size_t& budget, std::optional<VertexId>* witness = nullptr) {
        const std::size_t n = g.vertex_count();
        if (n == 0) return Tri::no;
        if (n == 1) {
            if (witness) *witness = 0;
            return Tri::yes;
        }
        if (g.edge_count() == n * (n - 1) / 2) {
            if (witness) *witness = 0;
            return Tri::yes;
        }
        if (!is_connected(g) || whitney_euler(g) != 1) return Tri::no;
        if (n > opt_.max_vertices) return Tri::unknown;
        std::string key = witness ? std::string() : canonical_key(g);
        if (!witness)
            if (auto hit = lookup(key)) return *hit ? Tri::yes : Tri::no;
        if (budget == 0) return Tri::unknown;
        --budget;
        bool unknown = false;
        for (VertexId x = 0; x < n; ++x) {
            Tri s = contractible(unit_sphere(g, x).graph, budget);
            if (s == Tri::no) continue;
            Tri rest = contractible(remove_vertex(g, x).graph, budget);
            if (s == Tri::yes && rest == Tri::yes) {
                if (witness) *witness = x;
                else store(key, true);
                return Tri::yes;
            }
            if (s == Tri::unknown || rest == Tri::unknown) unknown = true;
        }
        if (unknown) return Tri::unknown;
        if (!witness) store(key, false);
        return Tri::no;
    }

    Tri sphere(const Graph& g, int d, std::size_t& budget, std::optional<VertexId>* witness = nullptr) {
        const std::size_t n = g.vertex_count();
        if (d < -1) return Tri::no;
        if (d == -1) return n == 0 ? Tri::yes : Tri::no;
        if (n == 0) return Tri::no;
        if (whitney_euler(g) != (d % 2 == 0 ? 2 : 0)) return Tri::no;
        if (n > opt_.max_vertices) return Tri::unknown;
        std::string key = "S" + std::to_string(d) + canonical_key(g);
        if (!witness)
            if (auto hit = lookup(key)) return *hit ? Tri::yes : Tri::no;
        if (budget == 0) return Tri::unknown;
        --budget;
        bool unknown = false;
        for (VertexId x = 0; x < n; ++x) {
            Tri s = sphere(unit_sphere(g, x).graph, d - 1, budget);
            if (s == Tri::no) {
                store(key, false);
                return Tri::no;
            }
            if (s == Tri::unknown) unknown = true;
        }
        if (unknown) return Tri::unknown;
        for (VertexId x = 0; x < n; ++x) {
            Tri rest = contractible(remove_vertex(g, x).graph, budget);
            if (rest == Tri::yes) {
                if (witness) *witness = x;
                store(key, true);
                return Tri::yes;
            }
            if (rest == Tri::unknown) unknown = true;
        }
        if (unknown) return Tri::unknown;
        store(key, false);
        return Tri::no;
    }

    std::size_t cache_size() const {
        std::shared_lock lock(mutex_);
        return cache_.size();
    }

private:
    std::optional<bool> lookup(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it == cache_.end()) return std::nullopt;
        return it->second;
    }
    void store(const std::string& key, bool value) {
        std::unique_lock lock(mutex_);
        cache_.emplace(key, value);
    }

    RecognitionOptions opt_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, bool> cache_;
};

inline Recognizer& shared_recognizer() {
    static Recognizer r;
    return r;
}

inline HomotopyVerdict is_contractible(const Graph& g, Recognizer& r = shared_recognizer()) {
    std::size_t budget = r.options().budget;
    std::optional<VertexId> w;
    HomotopyVerdict v;
    switch (r.contractible(g, budget, &w)) {
        case Tri::yes: v.kind = Homotopy::contractible; v.witness = w; break;
        case Tri::no: v.kind = Homotopy::other; break;
        case Tri::unknown: v.kind = Homotopy::unknown; v.note = "search budget or size limit reached"; break;
    }
    return v;
}

inline HomotopyVerdict is_sphere(const Graph& g, int d, Recognizer& r = shared_recognizer()) {
    std::size_t budget = r.options().budget;
    std::optional<VertexId> w;
    HomotopyVerdict v;
    switch (r.sphere(g, d, budget, &w)) {
        case Tri::yes: v.kind = Homotopy::sphere; v.dimension = d; v.witness = w; break;
        case Tri::no: v.kind = Homotopy::other; break;
        case Tri::unknown: v.kind = Homotopy::unknown; v.note = "search budget or size limit reached"; break;
    }
    return v;
}

/// Every unit sphere is a (d-1)-sphere. Throws BudgetExceeded if undecided.
inline bool is_dgraph(const Graph& g, int d, Recognizer& r = shared_recognizer()) {
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
        std::size_t budget = r.options().budget;
        Tri s = r.sphere(unit_sphere(g, x).graph, d - 1, budget);
        if (s == Tri::no) return false;
        if (s == Tri::unknown) throw BudgetExceeded("could not decide the unit sphere of " + std::to_string(x));
    }
    return true;
}

/// Removal sequence certifying contractibility: each listed vertex (in the
/// current graph's numbering, parent ids) has a contractible unit sphere and
/// leaves a contractible graph; the last graph is K1. Empty if not certified.
inline std::vector<VertexId> contractible_removal_sequence(const Graph& g, Recognizer& r = shared_recognizer()) {
    std::vector<VertexId> seq;
    Subgraph cur{g, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v) cur.parent.push_back(v);
    while (cur.graph.vertex_count() > 1) {
        HomotopyVerdict v = is_contractible(cur.graph, r);
        if (v.kind != Homotopy::contractible) return {};
        VertexId x = *v.witness;
        seq.push_back(cur.parent[x]);
        Subgraph next = remove_vertex(cur.graph, x);
        for (auto& p : next.parent) p = cur.parent[p];
        cur = std::move(next);
    }
    if (cur.graph.vertex_count() == 1) seq.push_back(cur.parent[0]);
    return seq;
}

/// Greedily deletes vertices whose unit sphere is contractible (smallest id
/// first, repeated until none qualifies). Each deletion preserves homotopy type.
inline Subgraph homotopy_reduce(const Graph& g, Recognizer& r = shared_recognizer()) {
    Subgraph cur{g, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v) cur.parent.push_back(v);
    bool changed = true;
    while (changed && cur.graph.vertex_count() > 1) {
        changed = false;
        for (VertexId x = 0; x < cur.graph.vertex_count(); ++x) {
            if (is_contractible(unit_sphere(cur.graph, x).graph, r).kind != Homotopy::contractible) continue;
            Subgraph next = remove_vertex(cur.graph, x);
            for (auto& p : next.parent) p = cur.parent[p];
            cur = std::move(next);
            changed = true;
            break;
        }
    }
    return cur;
}

/// Sphere dimension of g up to the greedy homotopy reduction: Sphere(k) if the
/// reduced graph is a k-sphere, Other if it is not a sphere of any dimension.
/// Sound but incomplete: a homotopy sphere the reduction cannot simplify
/// enough is reported as Other.
inline HomotopyVerdict homotopy_sphere(const Graph& g, Recognizer& r = shared_recognizer()) {
    Subgraph red = homotopy_reduce(g, r);
    const auto n = static_cast<int>(red.graph.vertex_count());
    bool unknown = false;
    for (int d = -1; d < n; ++d) {
        HomotopyVerdict v = is_sphere(red.graph, d, r);
        if (v.kind == Homotopy::sphere) {
            v.note = "after reduction to " + std::to_string(n) + " vertices";
            return v;
        }
        if (v.kind == Homotopy::unknown) unknown = true;
    }
    HomotopyVerdict v;
    v.kind = unknown ? Homotopy::unknown : Homotopy::other;
    v.note = "reduced graph has " + std::to_string(n) + " vertices";
    return v;
}

// ---------------------------------------------------------------------------
// Betti numbers
// ---------------------------------------------------------------------------

struct BettiVector {
    std::vector<std::int64_t> b;
    unsigned characteristic = 2;

    std::int64_t euler() const {
        std::int64_t chi = 0;
        for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0) ? b[k] : -b[k];
        return chi;
    }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

namespace detail {

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Column j of the result lists (row, sign) for the boundary of the j-th
/// k-simplex; rows index the (k-1)-simplices.
struct Boundary {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> cols;
};

inline Boundary boundary(const Complex& c, int k, const std::vector<std::size_t>& start) {
    Boundary b;
    b.rows = start[static_cast<std::size_t>(k)] - start[static_cast<std::size_t>(k - 1)];
    for (std::size_t j = start[static_cast<std::size_t>(k)]; j < start[static_cast<std::size_t>(k + 1)]; ++j) {
        const Simplex& x = c[j];
        std::vector<std::pair<std::size_t, int>> col;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::size_t row = *c.index_of(x.without(x[i])) - start[static_cast<std::size_t>(k - 1)];
            col.emplace_back(row, i % 2 == 0 ? 1 : -1);
        }
        b.cols.push_back(std::move(col));
    }
    return b;
}

inline std::size_t rank_gf2(const Boundary& m) {
    const std::size_t words = (m.rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis(m.rows);
    std::size_t rank = 0;
    for (const auto& col : m.cols) {
        std::vector<std::uint64_t> v(words, 0);
        for (auto [r, s] : col) v[r / 64] ^= std::uint64_t{1} << (r % 64);
        for (;;) {
            std::size_t w = words;
            while (w > 0 && v[w - 1] == 0) --w;
            if (w == 0) break;
            std::size_t pivot = (w - 1) * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(v[w - 1])));
            if (basis[pivot].empty()) {
                basis[pivot] = std::move(v);
                ++rank;
                break;
            }
            for (std::size_t i = 0; i < words; ++i) v[i] ^= basis[pivot][i];
        }
    }
    return rank;
}

inline std::size_t rank_mod_p(const Boundary& m, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> basis(m.rows);
    std::size_t rank = 0;
    auto inverse = [p](std::uint64_t a) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    for (const auto& col : m.cols) {
        std::vector<std::uint64_t> v(m.rows, 0);
        for (auto [r, s] : col) v[r] = (v[r] + (s > 0 ? 1 : p - 1)) % p;
        for (std::size_t r = m.rows; r-- > 0;) {
            if (v[r] == 0) continue;
            if (basis[r].empty()) {
                std::uint64_t inv = inverse(v[r]);
                for (auto& x : v) x = x * inv % p;
                basis[r] = std::move(v);
                ++rank;
                break;
            }
            std::uint64_t f = v[r];
            for (std::size_t i = 0; i <= r; ++i) v[i] = (v[i] + (p - f) * basis[r][i]) % p;
        }
    }
    return rank;
}

/// Fraction-free (Bareiss) elimination over the integers.
inline std::size_t rank_rational(const Boundary& m) {
    const std::size_t rows = m.rows, cols = m.cols.size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (auto [r, s] : m.cols[j]) a[r][j] = s;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Betti numbers over the field of the given characteristic (0 or a prime).
inline BettiVector betti(const Complex& c, unsigned characteristic = 2) {
    if (characteristic != 0 && !detail::is_prime(characteristic))
        throw BadParameter("characteristic must be 0 or a prime");
    BettiVector out;
    out.characteristic = characteristic;
    const int d = c.dimension();
    if (d < 0) return out;
    std::vector<std::size_t> start(static_cast<std::size_t>(d) + 2, c.size());
    for (std::size_t i = c.size(); i-- > 0;) start[static_cast<std::size_t>(c[i].dim())] = i;
    for (int k = d; k >= 0; --k)
        if (start[static_cast<std::size_t>(k)] > start[static_cast<std::size_t>(k + 1)])
            start[static_cast<std::size_t>(k)] = start[static_cast<std::size_t>(k + 1)];
    FVector f = f_vector(c);
    std::vector<std::size_t> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k) {
        detail::Boundary m = detail::boundary(c, k, start);
        rank[static_cast<std::size_t>(k)] = characteristic == 2   ? detail::rank_gf2(m)
                                            : characteristic == 0 ? detail::rank_rational(m)
                                                                  : detail::rank_mod_p(m, characteristic);
    }
    for (int k = 0; k <= d; ++k)
        out.b.push_back(f.counts[static_cast<std::size_t>(k)] -
                        static_cast<std::int64_t>(rank[static_cast<std::size_t>(k)]) -
                        static_cast<std::int64_t>(rank[static_cast<std::size_t>(k + 1)]));
    return out;
}

// ---------------------------------------------------------------------------
// Hyperbolic vertices and Morse counts
// ---------------------------------------------------------------------------

enum class Criticality { hyperbolic, not_hyperbolic, unknown };

struct HyperbolicVerdict {
    Criticality kind = Criticality::unknown;
    /// Morse index m when hyperbolic: S^- is an (m-1)-sphere.
    int morse_index = 0;
    std::string note;
};

/// v is hyperbolic with Morse index m on a d-graph when S^-(v) is an
/// (m-1)-sphere, S^+(v) a (d-m-1)-sphere and their join a (d-1)-sphere, each
/// up to homotopy reduction.
inline HyperbolicVerdict hyperbolic_classify(const Digraph& dg, VertexId v, int dim, bool check_dgraph = false,
                                             Recognizer& r = shared_recognizer()) {
    dg.base().check(v);
    if (check_dgraph && !is_dgraph(dg.base(), dim, r))
        throw NotDGraph("graph is not a " + std::to_string(dim) + "-graph");
    Graph minus = minus_sphere(dg, v).graph;
    Graph plus = plus_sphere(dg, v).graph;
    HyperbolicVerdict out;
    HomotopyVerdict sm = homotopy_sphere(minus, r);
    HomotopyVerdict sp = homotopy_sphere(plus, r);
    if (sm.kind == Homotopy::unknown || sp.kind == Homotopy::unknown) {
        out.note = "sphere test undecided";
        return out;
    }
    out.kind = Criticality::not_hyperbolic;
    if (sm.kind != Homotopy::sphere) {
        out.note = "S- is not a homotopy sphere";
        return out;
    }
    if (sp.kind != Homotopy::sphere) {
        out.note = "S+ is not a homotopy sphere";
        return out;
    }
    const int m = sm.dimension + 1;
    if (sp.dimension != dim - m - 1) {
        out.note = "S+ has dimension " + std::to_string(sp.dimension) + ", expected " + std::to_string(dim - m - 1);
        return out;
    }
    HomotopyVerdict sj = homotopy_sphere(graph_join(minus, plus), r);
    if (sj.kind == Homotopy::unknown) {
        out.kind = Criticality::unknown;
        out.note = "join test undecided";
        return out;
    }
    if (sj.kind != Homotopy::sphere || sj.dimension != dim - 1) {
        out.note = "join of S- and S+ is not a " + std::to_string(dim - 1) + "-sphere";
        return out;
    }
    out.kind = Criticality::hyperbolic;
    out.morse_index = m;
    return out;
}

struct MorseVertex {
    VertexId vertex = 0;
    HyperbolicVerdict verdict;
    /// 1 - chi(S^-(v)).
    std::int64_t index = 0;
    bool regular = false;
};

struct MorseReport {
    std::vector<MorseVertex> vertices;
    /// counts[m] = number of hyperbolic vertices with Morse index m.
    std::vector<std::int64_t> counts;
    std::int64_t alternating_sum = 0;
    std::int64_t euler = 0;
    bool holds = false;
    /// Betti numbers (characteristic 2), reported next to counts; no
    /// inequality between them is asserted.
    BettiVector betti;
};

/// Classifies every vertex (hyperbolic, or regular when S^- is not a sphere
/// and 1 - chi(S^-) = 0) and compares sum (-1)^m c_m with chi.
inline MorseReport morse_count_check(const Digraph& dg, int dim, Recognizer& r = shared_recognizer()) {
    MorseReport rep;
    const Graph& g = dg.base();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        MorseVertex mv;
        mv.vertex = v;
        mv.verdict = hyperbolic_classify(dg, v, dim, false, r);
        mv.index = 1 - whitney_euler(minus_sphere(dg, v).graph);
        if (mv.verdict.kind == Criticality::hyperbolic) {
            auto m = static_cast<std::size_t>(mv.verdict.morse_index);
            if (rep.counts.size() <= m) rep.counts.resize(m + 1, 0);
            ++rep.counts[m];
        } else if (mv.verdict.kind == Criticality::not_hyperbolic && mv.index == 0) {
            mv.regular = true;
        } else {
            throw UnclassifiedVertex(v);
        }
        rep.vertices.push_back(std::move(mv));
    }
    for (std::size_t m = 0; m < rep.counts.size(); ++m)
        rep.alternating_sum += (m % 2 == 0) ? rep.counts[m] : -rep.counts[m];
    Complex c = whitney_complex(g);
    rep.euler = euler_characteristic(c);
    rep.holds = rep.alternating_sum == rep.euler;
    rep.betti = betti(c, 2);
    return rep;
}

}  // namespace dircomplex
