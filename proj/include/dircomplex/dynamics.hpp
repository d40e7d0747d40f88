/**
 * Discrete vector fields: a direction F: G -> V paired with a section
 * V -> G (v lies in its own section simplex). Composing them gives the maps
 * T: V -> V and T: G -> G whose orbits live in the connection graph.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "complex.hpp"
#include "direction.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace dircomplex {

/// v -> index of a simplex containing v, for every vertex of a complex.
class Section {
public:
    Section() = default;

    Section(const Complex& c, const std::map<VertexId, Simplex>& choice) {
        for (VertexId v : c.vertices()) {
            auto it = choice.find(v);
            if (it == choice.end()) throw BadParameter("section misses vertex " + std::to_string(v));
            auto idx = c.index_of(it->second);
            if (!idx) throw NotASimplex(it->second.to_string() + " is not in the complex");
            if (!it->second.contains(v))
                throw BadParameter("section of " + std::to_string(v) + " does not contain it");
            of_[v] = *idx;
        }
    }

    std::size_t operator()(VertexId v) const {
        auto it = of_.find(v);
        if (it == of_.end()) throw UnknownVertex(v);
        return it->second;
    }
    const std::map<VertexId, std::size_t>& entries() const { return of_; }

    /// Every vertex maps to its own 0-simplex.
    static Section singletons(const Complex& c) {
        std::map<VertexId, Simplex> m;
        for (VertexId v : c.vertices()) m.emplace(v, Simplex{v});
        return Section(c, m);
    }

    /// The canonically first simplex of maximal size containing v.
    static Section maximal(const Complex& c) {
        std::map<VertexId, Simplex> m;
        for (const Simplex& x : c.simplices())
            for (VertexId v : x) {
                auto it = m.find(v);
                if (it == m.end()) m.emplace(v, x);
                else if (x.size() > it->second.size()) it->second = x;
            }
        return Section(c, m);
    }

    /// The canonically first largest simplex in which v is the minimum of g.
    static Section upper(const Complex& c, std::span<const std::int64_t> g) {
        std::map<VertexId, Simplex> m;
        for (const Simplex& x : c.simplices()) {
            VertexId low = x[0];
            for (VertexId v : x) {
                if (v >= g.size()) throw UnknownVertex(v);
                if (g[v] < g[low]) low = v;
            }
            auto it = m.find(low);
            if (it == m.end()) m.emplace(low, x);
            else if (x.size() > it->second.size()) it->second = x;
        }
        return Section(c, m);
    }

    /// The edge to the smallest out-neighbour, or {v} at a sink.
    static Section out_edge(const Complex& c, const Digraph& d) {
        std::map<VertexId, Simplex> m;
        for (VertexId v : c.vertices()) {
            auto out = v < d.vertex_count() ? d.out_neighbors(v) : std::vector<VertexId>{};
            m.emplace(v, out.empty() ? Simplex{v} : Simplex{v, out.front()});
        }
        return Section(c, m);
    }

    /// Uniform choice among the simplices containing v.
    static Section random(const Complex& c, std::uint64_t seed) {
        std::map<VertexId, std::vector<std::size_t>> star;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (VertexId v : c[i]) star[v].push_back(i);
        Rng rng = Rng::stream(seed, "random_section");
        std::map<VertexId, Simplex> m;
        for (const auto& [v, members] : star) m.emplace(v, c[members[rng.below(members.size())]]);
        return Section(c, m);
    }

private:
    std::map<VertexId, std::size_t> of_;
};

struct VectorField {
    Complex complex;
    DirectionMap direction;
    Section section;
};

/// T(v) = F(section(v)); v and T(v) share the simplex section(v).
inline VertexId step_v(const VectorField& f, VertexId v) { return f.direction[f.section(v)]; }

/// T(x) = section(F(x)) on simplex indices; x and T(x) share the vertex F(x).
inline std::size_t step_s(const VectorField& f, std::size_t x) { return f.section(f.direction[x]); }

inline Simplex step_s(const VectorField& f, const Simplex& x) {
    auto idx = f.complex.index_of(x);
    if (!idx) throw NotASimplex(x.to_string() + " is not in the complex");
    return f.complex[step_s(f, *idx)];
}

template <typename State>
struct Orbit {
    /// Distinct states in visiting order; the next state would be states[tail_start].
    std::vector<State> states;
    std::size_t tail_start = 0;
    std::size_t period = 0;
};

/// Iterates `step` from `start` until a state repeats. Throws BudgetExceeded if
/// that needs more than max_steps steps.
template <typename State, typename Step>
Orbit<State> trace_orbit(State start, std::size_t max_steps, Step step) {
    if (max_steps < 1) throw BadParameter("max_steps must be at least 1");
    Orbit<State> o;
    std::map<State, std::size_t> first_seen;
    State s = start;
    for (std::size_t k = 0;; ++k) {
        if (auto it = first_seen.find(s); it != first_seen.end()) {
            o.tail_start = it->second;
            o.period = o.states.size() - it->second;
            return o;
        }
        first_seen.emplace(s, o.states.size());
        o.states.push_back(s);
        if (k == max_steps) break;
        s = step(s);
    }
    throw BudgetExceeded("no repeated state within " + std::to_string(max_steps) + " steps");
}

inline Orbit<VertexId> orbit_v(const VectorField& f, VertexId start, std::size_t max_steps) {
    if (!f.complex.has_vertex(start)) throw UnknownVertex(start);
    return trace_orbit<VertexId>(start, max_steps, [&](VertexId v) { return step_v(f, v); });
}

/// Orbit of simplex indices.
inline Orbit<std::size_t> orbit_s(const VectorField& f, std::size_t start, std::size_t max_steps) {
    if (start >= f.complex.size()) throw BadParameter("simplex index out of range");
    return trace_orbit<std::size_t>(start, max_steps, [&](std::size_t x) { return step_s(f, x); });
}

/// The eventual image of T on a finite state set: intersection of T^k(all).
template <typename State>
struct EventualImage {
    std::vector<State> states;  // sorted
    /// T restricted to `states` is a bijection onto `states`.
    bool is_permutation = false;
    /// Cycle lengths of that permutation, ascending.
    std::vector<std::size_t> cycle_lengths;
};

template <typename State, typename Step>
EventualImage<State> eventual_image(std::vector<State> all, Step step) {
    std::set<State> current(all.begin(), all.end());
    for (;;) {
        std::set<State> next;
        for (const State& s : current) next.insert(step(s));
        if (next == current) break;
        current = std::move(next);
    }
    EventualImage<State> out;
    out.states.assign(current.begin(), current.end());
    std::set<State> hit;
    for (const State& s : current) hit.insert(step(s));
    out.is_permutation = hit == current;
    if (out.is_permutation) {
        std::set<State> visited;
        for (const State& s : current) {
            if (visited.contains(s)) continue;
            std::size_t len = 0;
            for (State t = s; !visited.contains(t); t = step(t)) {
                visited.insert(t);
                ++len;
            }
            out.cycle_lengths.push_back(len);
        }
        std::sort(out.cycle_lengths.begin(), out.cycle_lengths.end());
    }
    return out;
}

inline EventualImage<VertexId> eventual_image_v(const VectorField& f) {
    return eventual_image<VertexId>(f.complex.vertices(), [&](VertexId v) { return step_v(f, v); });
}

inline EventualImage<std::size_t> eventual_image_s(const VectorField& f) {
    std::vector<std::size_t> all(f.complex.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return eventual_image<std::size_t>(std::move(all), [&](std::size_t x) { return step_s(f, x); });
}

/// Simplices with F+(x) = F-(x). Every 0-simplex is one.
inline std::vector<Simplex> equilibria(const Complex& c, const BiDirection& b) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (b.forward[i] == b.backward[i]) out.push_back(c[i]);
    return out;
}

/// Lint: vertices v whose section x != {v} is sent straight back to v, a
/// two-step loop that ends every orbit reaching v.
inline std::vector<VertexId> degenerate_loops(const VectorField& f) {
    std::vector<VertexId> out;
    for (const auto& [v, idx] : f.section.entries())
        if (f.complex[idx].size() > 1 && f.direction[idx] == v) out.push_back(v);
    return out;
}

}  // namespace dircomplex
