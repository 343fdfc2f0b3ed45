/**
 * Graded Betti tables and a brute-force oracle for them.
 *
 * Indexing: beta(0, j) counts minimal generators of the ideal in degree j,
 * beta(1, j) first syzygies, and so on.
 *
 * The oracle uses the upper Koszul simplicial complex
 *     K^m(I) = { tau subset of {a,b,c,d} : m / x^tau in I }
 * and beta(i, m)(I) = dim reduced H_{i-1}(K^m(I)) over the rationals.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <ostream>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tetra/monomial.hpp"

namespace tetra {

class BettiTable {
public:
    using Key = std::pair<int, int>; // (homological index i, internal degree j)

    BettiTable() = default;
    BettiTable(std::initializer_list<std::pair<const Key, long long>> init) {
        for (const auto& [k, v] : init) add(k.first, k.second, v);
    }

    void add(int i, int j, long long n) {
        if (n == 0) return;
        auto& slot = entries_[{i, j}];
        slot += n;
        if (slot == 0) entries_.erase({i, j});
    }

    long long at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<Key, long long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    BettiTable shifted(int s) const {
        BettiTable out;
        for (const auto& [k, v] : entries_) out.add(k.first, k.second + s, v);
        return out;
    }

    BettiTable& operator+=(const BettiTable& o) {
        for (const auto& [k, v] : o.entries_) add(k.first, k.second, v);
        return *this;
    }

    friend BettiTable operator+(BettiTable a, const BettiTable& b) { return a += b; }

    int projective_dimension() const {
        int pd = -1;
        for (const auto& [k, v] : entries_) pd = std::max(pd, k.first);
        return pd;
    }

    int regularity() const {
        int reg = std::numeric_limits<int>::min();
        for (const auto& [k, v] : entries_) reg = std::max(reg, k.second - k.first);
        return reg;
    }

    int min_generator_degree() const {
        int d = std::numeric_limits<int>::max();
        for (const auto& [k, v] : entries_)
            if (k.first == 0) d = std::min(d, k.second);
        return d;
    }

    int max_generator_degree() const {
        int d = std::numeric_limits<int>::min();
        for (const auto& [k, v] : entries_)
            if (k.first == 0) d = std::max(d, k.second);
        return d;
    }

    long long generator_count() const {
        long long n = 0;
        for (const auto& [k, v] : entries_)
            if (k.first == 0) n += v;
        return n;
    }

    /// Generators in a single degree d and entries only at j = d + i.
    bool is_linear() const {
        if (entries_.empty()) return false;
        const int d = min_generator_degree();
        return std::all_of(entries_.begin(), entries_.end(),
                           [d](const auto& e) { return e.first.second == d + e.first.first; });
    }

    /// Alternating sum sum_i (-1)^i beta(i, j) for each degree j.
    std::map<int, long long> alternating_sums() const {
        std::map<int, long long> out;
        for (const auto& [k, v] : entries_) out[k.second] += (k.first % 2 == 0 ? v : -v);
        return out;
    }

    bool operator==(const BettiTable&) const = default;

private:
    std::map<Key, long long> entries_;
};

inline std::string to_string(const BettiTable& b) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : b.entries()) {
        if (!first) s += ", ";
        s += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "):" + std::to_string(v);
        first = false;
    }
    return s + "}";
}

inline std::ostream& operator<<(std::ostream& os, const BettiTable& b) { return os << to_string(b); }

// ---------------------------------------------------------------------------
// Simplicial complexes on the vertex set {a,b,c,d}

/// Faces are 4-bit vertex masks; the complex is a 16-bit set of faces.
/// Mask 0 means the void complex, mask 1 the complex {emptyset}.
class SimplicialComplex4 {
public:
    SimplicialComplex4() = default;
    explicit SimplicialComplex4(std::uint16_t faces) : faces_(faces) {}

    static SimplicialComplex4 from_faces(std::initializer_list<std::uint8_t> faces) {
        std::uint16_t m = 0;
        for (auto f : faces) m = static_cast<std::uint16_t>(m | (1u << f));
        return SimplicialComplex4(m);
    }

    bool has_face(unsigned face) const { return (faces_ >> face) & 1u; }
    std::uint16_t mask() const { return faces_; }
    bool is_void() const { return faces_ == 0; }

    bool is_downward_closed() const {
        for (unsigned f = 0; f < 16; ++f) {
            if (!has_face(f)) continue;
            for (unsigned v = 0; v < 4; ++v)
                if ((f >> v) & 1u && !has_face(f & ~(1u << v))) return false;
        }
        return true;
    }

private:
    std::uint16_t faces_ = 0;
};

namespace detail {

/// Exact rank of a small integer matrix; rows are kept primitive (gcd 1)
/// after every elimination step so entries stay small.
inline int integer_rank(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const auto& p = m[rank];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const long long f = m[r][c];
            long long g = 0;
            for (std::size_t k = 0; k < cols; ++k) {
                m[r][k] = p[c] * m[r][k] - f * p[k];
                g = std::gcd(g, m[r][k]);
            }
            if (g > 1)
                for (auto& v : m[r]) v /= g;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace detail

/// Ranks of reduced homology in dimensions -1, 0, 1, 2 (index 0..3).
inline std::array<int, 4> reduced_homology_ranks(const SimplicialComplex4& K) {
    std::array<int, 4> out{};
    if (K.is_void()) return out;
    // faces grouped by dimension -1..3
    std::array<std::vector<unsigned>, 5> faces;
    for (unsigned f = 0; f < 16; ++f)
        if (K.has_face(f)) faces[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    // boundary rank from dimension q to q-1, q = 0..3 (index = popcount)
    std::array<int, 5> rank{};
    for (std::size_t q = 1; q <= 4; ++q) {
        const auto& hi = faces[q];
        const auto& lo = faces[q - 1];
        if (hi.empty() || lo.empty()) continue;
        std::vector<std::vector<long long>> m(lo.size(), std::vector<long long>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c) {
            int sign = 1;
            for (unsigned v = 0; v < 4; ++v) {
                if (!((hi[c] >> v) & 1u)) continue;
                const unsigned sub = hi[c] & ~(1u << v);
                const auto row = std::find(lo.begin(), lo.end(), sub) - lo.begin();
                m[static_cast<std::size_t>(row)][c] = sign;
                sign = -sign;
            }
        }
        rank[q] = detail::integer_rank(std::move(m));
    }
    // H~_{q-1} = dim C_{q-1} - rank d_{q-1} - rank d_q, with C indexed by popcount
    for (std::size_t q = 0; q < 4; ++q) {
        const int dim = static_cast<int>(faces[q].size());
        const int out_rank = q >= 1 ? rank[q] : 0;
        out[q] = dim - out_rank - rank[q + 1];
    }
    return out;
}

inline SimplicialComplex4 upper_koszul(const MonomialIdeal& I, const Monomial& m) {
    std::uint16_t mask = 0;
    for (unsigned f = 0; f < 16; ++f) {
        Monomial q = m;
        bool ok = true;
        for (int v = 0; v < kNumVars; ++v) {
            if (!((f >> v) & 1u)) continue;
            if (q.exp[static_cast<std::size_t>(v)] == 0) {
                ok = false;
                break;
            }
            --q.exp[static_cast<std::size_t>(v)];
        }
        if (ok && I.contains(q)) mask = static_cast<std::uint16_t>(mask | (1u << f));
    }
    return SimplicialComplex4(mask);
}

/// Graded Betti numbers by summing Koszul homology over every multidegree
/// below the lcm of the generators.
inline BettiTable betti_table_oracle(const MonomialIdeal& I) {
    BettiTable out;
    if (I.is_zero()) return out;
    const Monomial top = I.lcm_all();
    Monomial m;
    for (m.exp[0] = 0; m.exp[0] <= top[0]; ++m.exp[0])
        for (m.exp[1] = 0; m.exp[1] <= top[1]; ++m.exp[1])
            for (m.exp[2] = 0; m.exp[2] <= top[2]; ++m.exp[2])
                for (m.exp[3] = 0; m.exp[3] <= top[3]; ++m.exp[3]) {
                    if (!I.contains(m)) continue;
                    const auto K = upper_koszul(I, m);
                    if (K.mask() == 0xFFFF) continue; // full simplex: acyclic
                    const auto h = reduced_homology_ranks(K);
                    for (int i = 0; i < 4; ++i)
                        if (h[static_cast<std::size_t>(i)]) out.add(i, m.degree(), h[static_cast<std::size_t>(i)]);
                }
    return out;
}

} // namespace tetra
