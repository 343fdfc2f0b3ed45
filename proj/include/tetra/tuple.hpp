/**
 * Tetrahedral curves as 6-tuples of edge multiplicities, the S4 action on
 * them, the four reduction systems (A)-(D) and the maximal-weight reduction
 * algorithm, plus the purely numerical classifiers.
 *
 * Edge order: (a,b), (a,c), (a,d), (b,c), (b,d), (c,d). Positions are
 * 0-based in code; edge k and edge 5-k are opposite.
 */
#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/monomial.hpp"

namespace tetra {

inline constexpr std::array<std::pair<int, int>, 6> kEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int x, int y) {
    if (x > y) std::swap(x, y);
    for (int k = 0; k < 6; ++k)
        if (kEdges[static_cast<std::size_t>(k)].first == x && kEdges[static_cast<std::size_t>(k)].second == y)
            return k;
    return -1;
}

constexpr int opposite_edge(int k) { return 5 - k; }

class TetTuple {
public:
    TetTuple() = default;
    explicit TetTuple(std::array<int, 6> a) : a_(a) {
        for (int v : a_)
            if (v < 0) throw Error(ErrorKind::InvalidArgument, "tuple entries must be non-negative");
    }
    TetTuple(int a1, int a2, int a3, int a4, int a5, int a6) : TetTuple(std::array<int, 6>{a1, a2, a3, a4, a5, a6}) {}

    int operator[](int k) const { return a_[static_cast<std::size_t>(k)]; }
    const std::array<int, 6>& entries() const { return a_; }

    bool is_trivial() const {
        return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
    }
    int total() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    int max_entry() const { return *std::max_element(a_.begin(), a_.end()); }

    auto operator<=>(const TetTuple&) const = default;
    bool operator==(const TetTuple&) const = default;

private:
    std::array<int, 6> a_{};
};

inline std::string to_string(const TetTuple& t) {
    std::string s;
    for (int k = 0; k < 6; ++k) {
        if (k) s += ',';
        s += std::to_string(t[k]);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const TetTuple& t) { return os << '(' << to_string(t) << ')'; }

/// Parses six comma-separated non-negative decimal integers, e.g. "3,3,3,1,2,4".
inline TetTuple parse_tuple(std::string_view text) {
    std::array<int, 6> a{};
    std::size_t count = 0, pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::Parse, "tuple '" + std::string(text) + "': " + why);
    };
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (field.empty()) fail("empty entry");
        if (count == 6) fail("six entries required");
        int v = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size() || field.front() == '-' || field.front() == '+')
            fail("entries must be non-negative decimal integers");
        a[count++] = v;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (count != 6) fail("six entries required");
    return TetTuple(a);
}

// ---------------------------------------------------------------------------
// Symmetry

using VertexPermutation = std::array<int, 4>;

/// Vertex permutation p sends the weight on edge {x,y} to edge {p[x],p[y]}.
inline TetTuple act(const VertexPermutation& p, const TetTuple& t) {
    std::array<int, 6> out{};
    for (int k = 0; k < 6; ++k) {
        const auto [x, y] = kEdges[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(edge_index(p[static_cast<std::size_t>(x)], p[static_cast<std::size_t>(y)]))] = t[k];
    }
    return TetTuple(out);
}

inline const std::array<VertexPermutation, 24>& all_vertex_permutations() {
    static const std::array<VertexPermutation, 24> perms = [] {
        std::array<VertexPermutation, 24> out{};
        VertexPermutation p = {0, 1, 2, 3};
        std::size_t i = 0;
        do {
            out[i++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

struct Canonical {
    TetTuple tuple;
    VertexPermutation permutation;
};

/// Lexicographically least tuple in the S4-orbit, with a permutation reaching it.
inline Canonical canonicalize(const TetTuple& t) {
    Canonical best{t, {0, 1, 2, 3}};
    for (const auto& p : all_vertex_permutations()) {
        const TetTuple img = act(p, t);
        if (img < best.tuple) best = {img, p};
    }
    return best;
}

inline bool same_orbit(const TetTuple& s, const TetTuple& t) {
    return canonicalize(s).tuple == canonicalize(t).tuple;
}

// ---------------------------------------------------------------------------
// Reductions

enum class ReductionType { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<ReductionType, 4> kReductionTypes = {ReductionType::A, ReductionType::B,
                                                                 ReductionType::C, ReductionType::D};

inline char to_char(ReductionType ty) { return static_cast<char>('A' + static_cast<int>(ty)); }

/// The linear form G of a reduction is the variable named by its type.
inline int linear_form_var(ReductionType ty) { return static_cast<int>(ty); }

/// The three edges of a facet: those containing the vertex of the type.
inline std::array<int, 3> facet_edges(ReductionType ty) {
    const int v = linear_form_var(ty);
    std::array<int, 3> out{};
    std::size_t n = 0;
    for (int k = 0; k < 6; ++k)
        if (kEdges[static_cast<std::size_t>(k)].first == v || kEdges[static_cast<std::size_t>(k)].second == v)
            out[n++] = k;
    return out;
}

inline int facet_weight(const TetTuple& t, ReductionType ty) {
    int w = 0;
    for (int k : facet_edges(ty)) w += t[k];
    return w;
}

inline std::array<int, 4> facet_weights(const TetTuple& t) {
    return {facet_weight(t, ReductionType::A), facet_weight(t, ReductionType::B), facet_weight(t, ReductionType::C),
            facet_weight(t, ReductionType::D)};
}

inline int max_facet_weight(const TetTuple& t) {
    const auto w = facet_weights(t);
    return *std::max_element(w.begin(), w.end());
}

/// The three inequalities of system (ty): for each edge {y,z} away from the
/// vertex v, a_{vy} + a_{vz} >= a_{yz}.
inline bool reduction_applicable(const TetTuple& t, ReductionType ty) {
    if (t.is_trivial()) return false;
    const int v = linear_form_var(ty);
    for (int k = 0; k < 6; ++k) {
        const auto [y, z] = kEdges[static_cast<std::size_t>(k)];
        if (y == v || z == v) continue;
        if (t[edge_index(v, y)] + t[edge_index(v, z)] < t[k]) return false;
    }
    return true;
}

struct ReductionStep {
    ReductionType type;
    TetTuple parent;
    TetTuple child;
    Monomial F;
    int G; // variable index of the linear form

    int f_degree() const { return F.degree(); }
};

inline ReductionStep apply_reduction(const TetTuple& t, ReductionType ty) {
    if (t.is_trivial()) throw Error(ErrorKind::NotApplicable, "the trivial curve admits no reduction");
    if (!reduction_applicable(t, ty))
        throw Error(ErrorKind::NotApplicable, std::string("system (") + to_char(ty) + ") fails for " + to_string(t));
    const int v = linear_form_var(ty);
    std::array<int, 6> child = t.entries();
    Monomial F;
    for (int k : facet_edges(ty)) {
        child[static_cast<std::size_t>(k)] = std::max(0, t[k] - 1);
        const auto [x, y] = kEdges[static_cast<std::size_t>(k)];
        F.exp[static_cast<std::size_t>(x == v ? y : x)] += t[k];
    }
    return {ty, t, TetTuple(child), F, v};
}

inline bool is_minimal(const TetTuple& t) {
    if (t.is_trivial()) return false;
    return std::none_of(kReductionTypes.begin(), kReductionTypes.end(),
                        [&](ReductionType ty) { return reduction_applicable(t, ty); });
}

/// The numerical minimality criterion, evaluated after moving a maximal entry
/// to the (c,d) position by the symmetry action.
inline bool is_minimal_numerical(const TetTuple& t) {
    if (t.is_trivial()) return false;
    const int mx = t.max_entry();
    for (const auto& p : all_vertex_permutations()) {
        const TetTuple s = act(p, t);
        if (s[5] != mx) continue;
        const bool first = s[0] > std::max(s[2] + s[4], s[1] + s[3]);
        const bool last = s[5] > std::max(s[3] + s[4], s[1] + s[2]);
        if (first && last) return true;
    }
    return false;
}

/// Reduces the first applicable facet of maximal weight in the order A<B<C<D.
inline ReductionStep max_weight_reduction(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::IsTrivial, "the trivial curve admits no reduction");
    const int w = max_facet_weight(t);
    for (ReductionType ty : kReductionTypes)
        if (facet_weight(t, ty) == w && reduction_applicable(t, ty)) return apply_reduction(t, ty);
    throw Error(ErrorKind::IsMinimal, to_string(t) + " is minimal");
}

/// All applicable reductions along facets of maximal weight.
inline std::vector<ReductionStep> max_weight_reductions(const TetTuple& t) {
    std::vector<ReductionStep> out;
    if (t.is_trivial()) return out;
    const int w = max_facet_weight(t);
    for (ReductionType ty : kReductionTypes)
        if (facet_weight(t, ty) == w && reduction_applicable(t, ty)) out.push_back(apply_reduction(t, ty));
    return out;
}

/// r >= 1 iff t lies in the orbit of (0,r,r,r,r,0).
inline std::optional<int> ci_power_form(const TetTuple& t) {
    for (int k = 0; k < 3; ++k) {
        if (t[k] != 0 || t[opposite_edge(k)] != 0) continue;
        std::optional<int> r;
        bool ok = true;
        for (int j = 0; j < 6; ++j) {
            if (j == k || j == opposite_edge(k)) continue;
            if (!r) r = t[j];
            ok = ok && t[j] == *r;
        }
        if (ok && r && *r >= 1) return r;
    }
    return std::nullopt;
}

/// r >= 1 iff t lies in the orbit of (r,0,r-1,r-1,0,r).
inline std::optional<int> buchsbaum_minimal_form(const TetTuple& t) {
    const int r = t.max_entry();
    if (r < 1) return std::nullopt;
    if (same_orbit(t, TetTuple(r, 0, r - 1, r - 1, 0, r))) return r;
    return std::nullopt;
}

enum class TerminalKind { Trivial, MinimalCurve, CIPower };

inline std::string_view to_string(TerminalKind k) {
    switch (k) {
    case TerminalKind::Trivial: return "Trivial";
    case TerminalKind::MinimalCurve: return "MinimalCurve";
    case TerminalKind::CIPower: return "CIPower";
    }
    return "";
}

struct ReductionTrace {
    std::vector<ReductionStep> steps; // top curve first
    TetTuple terminal;
    TerminalKind terminal_kind = TerminalKind::Trivial;
    int ci_r = 0; // meaningful for CIPower only
    /// Position in chain() of the first element of CI-power shape, if any.
    std::optional<std::size_t> first_ci_power;

    /// Parents of every step followed by the terminal.
    std::vector<TetTuple> chain() const {
        std::vector<TetTuple> c;
        for (const auto& s : steps) c.push_back(s.parent);
        c.push_back(terminal);
        return c;
    }

    const TetTuple& top() const { return steps.empty() ? terminal : steps.front().parent; }
};

inline ReductionTrace make_trace(std::vector<ReductionStep> steps, const TetTuple& terminal) {
    ReductionTrace tr;
    tr.steps = std::move(steps);
    tr.terminal = terminal;
    tr.terminal_kind = terminal.is_trivial() ? TerminalKind::Trivial : TerminalKind::MinimalCurve;
    const auto chain = tr.chain();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (ci_power_form(chain[i])) {
            tr.first_ci_power = i;
            break;
        }
    }
    return tr;
}

inline ReductionTrace reduction_trace(const TetTuple& t) {
    std::vector<ReductionStep> steps;
    TetTuple cur = t;
    while (!cur.is_trivial() && !is_minimal(cur)) {
        steps.push_back(max_weight_reduction(cur));
        cur = steps.back().child;
    }
    return make_trace(std::move(steps), cur);
}

/// The part of the trace the resolution is assembled from: cut at the first
/// CI-power element when the curve is arithmetically Cohen-Macaulay.
inline ReductionTrace resolution_base(const ReductionTrace& tr) {
    if (tr.terminal_kind != TerminalKind::Trivial || !tr.first_ci_power) return tr;
    ReductionTrace out;
    const std::size_t cut = *tr.first_ci_power;
    out.steps.assign(tr.steps.begin(), tr.steps.begin() + static_cast<std::ptrdiff_t>(cut));
    out.terminal = tr.chain()[cut];
    out.terminal_kind = TerminalKind::CIPower;
    out.ci_r = *ci_power_form(out.terminal);
    out.first_ci_power = cut;
    return out;
}

// ---------------------------------------------------------------------------
// Numerical classifiers

inline bool is_acm(const TetTuple& t) {
    return !t.is_trivial() && reduction_trace(t).terminal_kind == TerminalKind::Trivial;
}

inline bool is_cwl(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "componentwise linearity of the trivial curve");
    const auto tr = reduction_trace(t);
    if (tr.terminal_kind == TerminalKind::MinimalCurve) return true;
    return !tr.first_ci_power.has_value();
}

struct SchwartauStatus {
    bool is_schwartau;
    bool cwl;
};

inline SchwartauStatus schwartau_status(const TetTuple& t) {
    if (t[1] != 0 || t[4] != 0) return {false, t.is_trivial() ? false : is_cwl(t)};
    if (t.is_trivial()) return {false, false};
    const bool positive = t[0] > 0 && t[2] > 0 && t[3] > 0 && t[5] > 0;
    return {true, !(positive && t[0] + t[5] == t[2] + t[3])};
}

inline long long degree_of_tuple(const TetTuple& t) {
    long long d = 0;
    for (int v : t.entries()) d += static_cast<long long>(v) * (v + 1) / 2;
    return d;
}

/// The edge carrying a maximal entry (first one) and its opposite.
inline std::pair<int, int> normalized_pair(const TetTuple& t) {
    const auto& e = t.entries();
    const int top = static_cast<int>(std::max_element(e.begin(), e.end()) - e.begin());
    return {opposite_edge(top), top};
}

inline int regularity_closed_form(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "regularity of the trivial curve is undefined");
    if (auto r = ci_power_form(t)) return 2 * *r + 1;
    if (is_minimal(t)) {
        const auto [lo, hi] = normalized_pair(t);
        return t[lo] + t[hi];
    }
    return max_facet_weight(t);
}

/// Every tuple with entry sum at most `bound`, in lexicographic order.
inline std::vector<TetTuple> tuples_with_sum_at_most(int bound) {
    std::vector<TetTuple> out;
    std::array<int, 6> a{};
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == 6) {
            out.emplace_back(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, bound);
    return out;
}

/// Every tuple with all entries at most `bound`.
inline std::vector<TetTuple> tuples_with_entries_at_most(int bound) {
    std::vector<TetTuple> out;
    std::array<int, 6> a{};
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == 6) {
            out.emplace_back(a);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            a[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace tetra
