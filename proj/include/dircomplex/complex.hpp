/**
 * Finite abstract simplicial complexes, energies, f-vectors, Euler
 * characteristic, Whitney complexes and connection graphs.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "simplex.hpp"

namespace dircomplex {

/// A downward-closed family of simplices, stored as a sorted list.
/// Immutable once built; construct through build_complex or whitney_complex.
class Complex {
public:
    Complex() = default;

    /// Caller guarantees `sorted` is strictly increasing and downward closed.
    static Complex from_canonical(std::vector<Simplex> sorted) {
        Complex c;
        c.simplices_ = std::move(sorted);
        for (const Simplex& x : c.simplices_) {
            if (x.size() != 1) break;
            c.vertices_.push_back(x[0]);
        }
        return c;
    }

    std::span<const Simplex> simplices() const { return simplices_; }
    const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    /// -1 for the empty complex.
    int dimension() const { return simplices_.empty() ? -1 : simplices_.back().dim(); }

    std::optional<std::size_t> index_of(const Simplex& x) const {
        auto it = std::lower_bound(simplices_.begin(), simplices_.end(), x);
        if (it == simplices_.end() || *it != x) return std::nullopt;
        return static_cast<std::size_t>(it - simplices_.begin());
    }
    bool contains(const Simplex& x) const { return index_of(x).has_value(); }
    bool has_vertex(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }
    /// One past the largest vertex id (0 when empty).
    VertexId vertex_bound() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

    friend bool operator==(const Complex&, const Complex&) = default;

private:
    std::vector<Simplex> simplices_;
    std::vector<VertexId> vertices_;
};

/// Largest simplex build_complex will close; closure is exponential in size.
inline constexpr std::size_t kDefaultMaxSimplexSize = 25;

/// With close = true returns the downward closure of `sets`. Otherwise checks
/// that `sets` is already closed and throws NotClosed with one witness pair.
inline Complex build_complex(const std::vector<Simplex>& sets, bool close,
                             std::size_t max_simplex_size = kDefaultMaxSimplexSize) {
    std::set<Simplex> family(sets.begin(), sets.end());
    if (close) {
        std::set<Simplex> closed;
        for (const Simplex& x : family) {
            if (x.size() > max_simplex_size)
                throw CapExceeded("simplex " + x.to_string() + " exceeds the size bound " +
                                  std::to_string(max_simplex_size));
            if (closed.contains(x)) continue;
            for_each_face(x, [&](Simplex f) { closed.insert(std::move(f)); });
        }
        return Complex::from_canonical(std::vector<Simplex>(closed.begin(), closed.end()));
    }
    // Facets present for every member implies closure by induction on size.
    for (const Simplex& x : family) {
        if (x.size() < 2) continue;
        // Dropping the last vertex first visits facets in canonical order.
        for (auto it = x.as_vector().rbegin(); it != x.as_vector().rend(); ++it) {
            Simplex facet = x.without(*it);
            if (!family.contains(facet))
                throw NotClosed(facet.as_vector(), x.as_vector(),
                                "missing face " + facet.to_string() + " of " + x.to_string());
        }
    }
    return Complex::from_canonical(std::vector<Simplex>(family.begin(), family.end()));
}

// ---------------------------------------------------------------------------
// Energies
// ---------------------------------------------------------------------------

/// Integer weights on simplices. Values are stored sparsely; simplices without
/// a stored value fall back to omega(x) = (-1)^dim(x), or are missing when the
/// function was created without a fallback.
class EnergyFunction {
public:
    EnergyFunction() = default;

    static EnergyFunction omega_default() { return EnergyFunction(); }

    static EnergyFunction explicit_values(std::map<Simplex, std::int64_t> values) {
        EnergyFunction h;
        h.values_ = std::move(values);
        h.fallback_ = false;
        return h;
    }

    /// H(x) = value on every simplex of c.
    static EnergyFunction constant(const Complex& c, std::int64_t value) {
        std::map<Simplex, std::int64_t> m;
        for (const Simplex& x : c.simplices()) m.emplace(x, value);
        return explicit_values(std::move(m));
    }

    void set(const Simplex& x, std::int64_t value) { values_[x] = value; }
    bool has_fallback() const { return fallback_; }
    const std::map<Simplex, std::int64_t>& stored() const { return values_; }

    std::optional<std::int64_t> at(const Simplex& x) const {
        if (auto it = values_.find(x); it != values_.end()) return it->second;
        if (fallback_) return omega(x);
        return std::nullopt;
    }

    /// Values aligned with c.simplices(); throws MissingEnergy.
    std::vector<std::int64_t> on(const Complex& c) const {
        std::vector<std::int64_t> out;
        out.reserve(c.size());
        for (const Simplex& x : c.simplices()) {
            auto h = at(x);
            if (!h) throw MissingEnergy(x.as_vector(), "no energy for simplex " + x.to_string());
            out.push_back(*h);
        }
        return out;
    }

private:
    std::map<Simplex, std::int64_t> values_;
    bool fallback_ = true;
};

inline std::int64_t total_energy(const Complex& c, const EnergyFunction& h) {
    std::int64_t sum = 0;
    for (std::int64_t v : h.on(c)) sum += v;
    return sum;
}

// ---------------------------------------------------------------------------
// f-vectors and Euler characteristic
// ---------------------------------------------------------------------------

struct FVector {
    std::vector<std::int64_t> counts;  // counts[k] = number of k-simplices

    std::int64_t euler() const {
        std::int64_t chi = 0;
        for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0) ? counts[k] : -counts[k];
        return chi;
    }
    friend bool operator==(const FVector&, const FVector&) = default;
};

inline FVector f_vector(const Complex& c) {
    FVector f;
    f.counts.assign(static_cast<std::size_t>(c.dimension() + 1), 0);
    for (const Simplex& x : c.simplices()) ++f.counts[x.size() - 1];
    return f;
}

inline std::int64_t euler_characteristic(const Complex& c) { return f_vector(c).euler(); }

inline Complex skeleton(const Complex& c, int k) {
    if (k < 0) throw BadParameter("skeleton dimension must be non-negative");
    std::vector<Simplex> keep;
    for (const Simplex& x : c.simplices()) {
        if (x.dim() > k) break;
        keep.push_back(x);
    }
    return Complex::from_canonical(std::move(keep));
}

// ---------------------------------------------------------------------------
// Whitney complexes
// ---------------------------------------------------------------------------

struct WhitneyOptions {
    /// Emit only simplices of dimension <= max_dim. Euler characteristic of a
    /// capped complex is not that of the graph.
    std::optional<int> max_dim;
    /// Without max_dim, a clique larger than this throws CapExceeded.
    std::size_t max_simplex_size = kDefaultMaxSimplexSize;
};

/// The complex of all cliques of g.
inline Complex whitney_complex(const Graph& g, const WhitneyOptions& opt = {}) {
    std::size_t limit = static_cast<std::size_t>(-1);
    if (opt.max_dim) {
        if (*opt.max_dim < 0) return Complex();
        limit = static_cast<std::size_t>(*opt.max_dim) + 1;
    } else if (std::size_t w = clique_number(g); w > opt.max_simplex_size) {
        throw CapExceeded("graph contains a clique of size " + std::to_string(w) +
                          ", above the bound " + std::to_string(opt.max_simplex_size));
    }
    std::vector<Simplex> out;
    for_each_clique(g, limit, [&](const std::vector<VertexId>& c) { out.push_back(Simplex::from_sorted(c)); });
    std::sort(out.begin(), out.end());
    return Complex::from_canonical(std::move(out));
}

/// Nodes are the simplices of c (in canonical order); two are adjacent iff
/// they are distinct and intersect.
inline Graph connection_graph(const Complex& c) {
    // Group simplices by vertex, then connect within each group.
    std::map<VertexId, std::vector<VertexId>> star;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (VertexId v : c[i]) star[v].push_back(static_cast<VertexId>(i));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [v, members] : star)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
    return Graph(c.size(), edges);
}

/// The 1-skeleton as a graph on 0..vertex_bound()-1.
inline Graph one_skeleton_graph(const Complex& c) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Simplex& x : c.simplices())
        if (x.size() == 2) edges.emplace_back(x[0], x[1]);
    return Graph(c.vertex_bound(), edges);
}

}  // namespace dircomplex
