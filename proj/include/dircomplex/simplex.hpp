/**
 * Vertex ids and simplices.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace dircomplex {

using VertexId = std::uint32_t;

/// A non-empty finite set of vertices, stored strictly increasing.
///
/// Simplices order by size first and lexicographically within a size, so a
/// sorted list of simplices lists vertices, then edges, then triangles.
class Simplex {
public:
    Simplex(std::initializer_list<VertexId> vs) : Simplex(std::vector<VertexId>(vs)) {}

    explicit Simplex(std::vector<VertexId> vs) : v_(std::move(vs)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (v_.empty()) throw EmptySimplex();
    }

    /// Caller guarantees vs is non-empty and strictly increasing.
    static Simplex from_sorted(std::vector<VertexId> vs) {
        Simplex s;
        s.v_ = std::move(vs);
        return s;
    }

    std::size_t size() const { return v_.size(); }
    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::span<const VertexId> vertices() const { return v_; }
    const std::vector<VertexId>& as_vector() const { return v_; }
    VertexId operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    /// The simplex with vertex v removed; requires size() >= 2 and contains(v).
    Simplex without(VertexId v) const {
        std::vector<VertexId> out;
        out.reserve(v_.size() - 1);
        for (VertexId w : v_)
            if (w != v) out.push_back(w);
        return from_sorted(std::move(out));
    }

    Simplex with(VertexId v) const {
        std::vector<VertexId> out(v_);
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return from_sorted(std::move(out));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;

    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(),
                                                      b.v_.end());
    }

private:
    Simplex() = default;
    std::vector<VertexId> v_;
};

/// (-1)^dim(x), the default energy.
inline std::int64_t omega(const Simplex& x) { return x.dim() % 2 == 0 ? 1 : -1; }

/// Calls fn(face) for every non-empty subset of x, including x itself.
/// Subsets are visited in bitmask order, not canonical order.
template <typename Fn>
void for_each_face(const Simplex& x, Fn&& fn) {
    const std::size_t k = x.size();
    if (k >= 63) throw CapExceeded("simplex of size " + std::to_string(k) + " has too many faces");
    std::vector<VertexId> buf;
    buf.reserve(k);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        buf.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t{1} << i)) buf.push_back(x[i]);
        fn(Simplex::from_sorted(buf));
    }
}

}  // namespace dircomplex
