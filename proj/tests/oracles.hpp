// Brute-force reference computations. Each one works from raw adjacency and
// subset enumeration and shares no algorithm with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dircomplex.hpp"

namespace oracle {

using dircomplex::Graph;
using dircomplex::Rational;
using dircomplex::Simplex;
using dircomplex::VertexId;

using Adj = std::vector<std::vector<bool>>;

inline Adj adjacency(const Graph& g) {
    Adj a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (auto [u, v] : g.edge_pairs()) a[u][v] = a[v][u] = true;
    return a;
}

/// Every clique as a sorted vertex list, by testing all 2^n subsets.
inline std::vector<std::vector<VertexId>> cliques(const Adj& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<VertexId>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<VertexId> s;
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = a[s[i]][s[j]];
        if (ok) out.push_back(s);
    }
    return out;
}

inline std::vector<std::vector<VertexId>> cliques(const Graph& g) { return cliques(adjacency(g)); }

inline std::vector<std::int64_t> f_vector(const Adj& a) {
    std::vector<std::int64_t> f;
    for (const auto& c : cliques(a)) {
        if (f.size() < c.size()) f.resize(c.size(), 0);
        ++f[c.size() - 1];
    }
    return f;
}

inline std::int64_t euler(const Adj& a) {
    std::int64_t chi = 0;
    for (const auto& c : cliques(a)) chi += c.size() % 2 == 1 ? 1 : -1;
    return chi;
}

inline std::int64_t euler(const Graph& g) { return euler(adjacency(g)); }

inline Adj induced(const Adj& a, const std::vector<VertexId>& keep) {
    Adj b(keep.size(), std::vector<bool>(keep.size(), false));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) b[i][j] = a[keep[i]][keep[j]];
    return b;
}

/// 1 - chi of the neighbours w with below(w) true.
template <typename Pred>
std::int64_t lower_index(const Adj& a, VertexId v, Pred below) {
    std::vector<VertexId> keep;
    for (VertexId w = 0; w < a.size(); ++w)
        if (a[v][w] && below(w)) keep.push_back(w);
    return 1 - euler(induced(a, keep));
}

/// Index by fibers: for each vertex, sum H over simplices whose chosen vertex it is.
inline std::map<VertexId, std::int64_t> transport(const std::vector<Simplex>& simplices,
                                                  const std::vector<std::int64_t>& energy,
                                                  const std::vector<VertexId>& target) {
    std::map<VertexId, std::int64_t> out;
    for (const Simplex& x : simplices)
        for (VertexId v : x) out[v] += 0;
    for (std::size_t i = 0; i < simplices.size(); ++i) out[target[i]] += energy[i];
    return out;
}

/// Sum over cliques through v of omega / |x|.
inline Rational curvature(const Graph& g, VertexId v) {
    Rational k = 0;
    for (const auto& c : cliques(g))
        if (std::find(c.begin(), c.end(), v) != c.end())
            k += Rational(c.size() % 2 == 1 ? 1 : -1) / Rational(static_cast<std::int64_t>(c.size()));
    return k;
}

/// Rank of an integer matrix over Q by plain Gaussian elimination in rationals.
inline std::size_t rank_q(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Betti numbers over Q of a list of simplices (closed under faces).
inline std::vector<std::int64_t> betti_q(const std::vector<std::vector<VertexId>>& simplices) {
    std::map<std::size_t, std::vector<std::vector<VertexId>>> by_size;
    for (const auto& s : simplices) by_size[s.size()].push_back(s);
    std::size_t top = by_size.empty() ? 0 : by_size.rbegin()->first;
    std::vector<std::size_t> rank(top + 2, 0);
    for (std::size_t k = 2; k <= top; ++k) {
        const auto& rows = by_size[k - 1];
        const auto& cols = by_size[k];
        std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i) {
                auto face = cols[j];
                face.erase(face.begin() + static_cast<long>(i));
                auto r = std::find(rows.begin(), rows.end(), face) - rows.begin();
                m[static_cast<std::size_t>(r)][j] = i % 2 == 0 ? 1 : -1;
            }
        rank[k] = rank_q(std::move(m));
    }
    std::vector<std::int64_t> b;
    for (std::size_t k = 1; k <= top; ++k)
        b.push_back(static_cast<std::int64_t>(by_size[k].size()) - static_cast<std::int64_t>(rank[k]) -
                    static_cast<std::int64_t>(rank[k + 1]));
    return b;
}

/// Contractibility straight from the recursive definition; no pruning, no cache.
inline bool contractible(const Adj& a) {
    const std::size_t n = a.size();
    if (n == 0) return false;
    if (n == 1) return true;
    for (VertexId x = 0; x < n; ++x) {
        std::vector<VertexId> sphere, rest;
        for (VertexId w = 0; w < n; ++w) {
            if (w == x) continue;
            rest.push_back(w);
            if (a[x][w]) sphere.push_back(w);
        }
        if (contractible(induced(a, sphere)) && contractible(induced(a, rest))) return true;
    }
    return false;
}

inline bool sphere(const Adj& a, int d) {
    const std::size_t n = a.size();
    if (d == -1) return n == 0;
    if (d < -1 || n == 0) return false;
    for (VertexId x = 0; x < n; ++x) {
        std::vector<VertexId> s;
        for (VertexId w = 0; w < n; ++w)
            if (a[x][w]) s.push_back(w);
        if (!sphere(induced(a, s), d - 1)) return false;
    }
    for (VertexId x = 0; x < n; ++x) {
        std::vector<VertexId> rest;
        for (VertexId w = 0; w < n; ++w)
            if (w != x) rest.push_back(w);
        if (contractible(induced(a, rest))) return true;
    }
    return false;
}

/// Average over all vertex orders of the sphere-formula index
/// 1 - chi(neighbours ranked below v).
inline std::vector<Rational> expectation_by_orders(const Graph& g) {
    const std::size_t n = g.vertex_count();
    Adj a = adjacency(g);
    std::vector<std::int64_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    std::vector<std::int64_t> acc(n, 0);
    std::int64_t orders = 0;
    do {
        for (VertexId v = 0; v < n; ++v) acc[v] += lower_index(a, v, [&](VertexId w) { return rank[w] < rank[v]; });
        ++orders;
    } while (std::next_permutation(rank.begin(), rank.end()));
    std::vector<Rational> out;
    for (auto x : acc) out.push_back(Rational(x) / Rational(orders));
    return out;
}

}  // namespace oracle
