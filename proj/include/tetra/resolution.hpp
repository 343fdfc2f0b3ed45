/**
 * Closed-form Betti tables of tetrahedral curves.
 *
 * A curve is reduced along facets of maximal weight down to a base whose
 * resolution is known (the unit ideal, a minimal curve, or a power of the
 * (2,2) complete intersection). Every basic double link J = L*I + (F) above
 * the base has a minimal mapping cone, so J's table is I's table shifted by
 * one plus a generator in degree deg F and a syzygy in degree deg F + 1.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tetra/betti.hpp"
#include "tetra/error.hpp"
#include "tetra/tuple.hpp"

namespace tetra {

/// Linear resolution of a minimal curve, with the largest entry moved
/// opposite edge one: generators in degree a1+a6.
inline BettiTable minimal_curve_betti(const TetTuple& t) {
    if (!is_minimal(t)) throw Error(ErrorKind::NotMinimal, to_string(t) + " is not a minimal curve");
    const auto [lo, hi] = normalized_pair(t);
    const long long a1 = t[lo], a6 = t[hi];
    long long tri = 0; // sum over the four middle edges of a(a+1)/2
    for (int k = 0; k < 6; ++k)
        if (k != lo && k != hi) tri += static_cast<long long>(t[k]) * (t[k] + 1) / 2;
    const int d = static_cast<int>(a1 + a6);
    BettiTable b;
    b.add(0, d, (a1 + 1) * (a6 + 1) - tri);
    b.add(1, d + 1, 2 * a1 * a6 + a1 + a6 - 2 * tri);
    b.add(2, d + 2, a1 * a6 - tri);
    return b;
}

/// (ab, cd)^r: r+1 generators in degree 2r, r syzygies in degree 2r+2.
inline BettiTable ci_power_betti(int r) {
    if (r < 1) throw Error(ErrorKind::InvalidArgument, "ci_power_betti needs r >= 1");
    BettiTable b;
    b.add(0, 2 * r, r + 1);
    b.add(1, 2 * r + 2, r);
    return b;
}

struct RecipeStep {
    int f_degree;
    int shift_applied;
};

struct ResolutionRecipe {
    TerminalKind base_kind = TerminalKind::Trivial;
    int ci_r = 0;
    BettiTable base_betti; // unshifted; the unit ideal is {(0,0):1}
    std::vector<RecipeStep> steps; // top first

    BettiTable assemble() const {
        BettiTable out = base_betti.shifted(static_cast<int>(steps.size()));
        for (const auto& s : steps) {
            out.add(0, s.f_degree + s.shift_applied, 1);
            out.add(1, s.f_degree + s.shift_applied + 1, 1);
        }
        return out;
    }
};

inline BettiTable base_betti(TerminalKind kind, const TetTuple& base) {
    switch (kind) {
    case TerminalKind::Trivial: return BettiTable{{{0, 0}, 1}};
    case TerminalKind::MinimalCurve: return minimal_curve_betti(base);
    case TerminalKind::CIPower: return ci_power_betti(*ci_power_form(base));
    }
    return {};
}

/// The recipe of an arbitrary maximal-weight trace (already cut to its base).
inline ResolutionRecipe recipe_from_trace(const ReductionTrace& base_trace) {
    ResolutionRecipe rec;
    rec.base_kind = base_trace.terminal_kind;
    rec.ci_r = base_trace.ci_r;
    rec.base_betti = base_betti(rec.base_kind, base_trace.terminal);
    const int s = static_cast<int>(base_trace.steps.size());
    for (int i = 0; i < s; ++i)
        rec.steps.push_back({base_trace.steps[static_cast<std::size_t>(i)].f_degree(), i});
    return rec;
}

inline ResolutionRecipe resolution_recipe(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "the trivial curve has no ideal resolution");
    return recipe_from_trace(resolution_base(reduction_trace(t)));
}

inline BettiTable betti_table(const TetTuple& t) { return resolution_recipe(t).assemble(); }

/// Betti tables obtained along every possible choice of maximal-weight facet
/// at every step. The theory predicts exactly one.
inline std::set<std::map<BettiTable::Key, long long>> betti_tables_all_tiebreaks(const TetTuple& t) {
    std::map<TetTuple, std::set<std::map<BettiTable::Key, long long>>> memo;
    auto rec = [&](auto&& self, const TetTuple& u, bool acm) -> std::set<std::map<BettiTable::Key, long long>> {
        if (auto it = memo.find(u); it != memo.end()) return it->second;
        std::set<std::map<BettiTable::Key, long long>> out;
        if (u.is_trivial()) {
            out.insert(base_betti(TerminalKind::Trivial, u).entries());
        } else if (acm && ci_power_form(u)) {
            out.insert(base_betti(TerminalKind::CIPower, u).entries());
        } else if (is_minimal(u)) {
            out.insert(base_betti(TerminalKind::MinimalCurve, u).entries());
        } else {
            for (const auto& step : max_weight_reductions(u)) {
                for (const auto& child : self(self, step.child, acm)) {
                    BettiTable b;
                    for (const auto& [k, v] : child) b.add(k.first, k.second + 1, v);
                    b.add(0, step.f_degree(), 1);
                    b.add(1, step.f_degree() + 1, 1);
                    out.insert(b.entries());
                }
            }
        }
        memo[u] = out;
        return out;
    };
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "the trivial curve has no ideal resolution");
    return rec(rec, t, is_acm(t));
}

inline bool has_linear_resolution(const TetTuple& t) { return betti_table(t).is_linear(); }

/// Orbits of arithmetically Cohen-Macaulay curves with a linear resolution:
/// 'a' the multiple line (r,0,0,0,0,0); 'b'..'e' four isolated orbits; 'f'
/// the chain of three lines and its linear ascents, (0,r,r,r,r+1,0) and
/// (0,r,r+1,r+1,r+1,0).
inline std::optional<char> acm_linear_family(const TetTuple& t) {
    if (t.is_trivial()) return std::nullopt;
    const TetTuple c = canonicalize(t).tuple;
    int nonzero = 0;
    for (int v : c.entries()) nonzero += v != 0;
    if (nonzero == 1) return 'a';
    static const std::array<std::pair<char, TetTuple>, 4> fixed = {{
        {'b', TetTuple(1, 1, 0, 1, 0, 0)},
        {'c', TetTuple(1, 1, 1, 1, 1, 1)},
        {'d', TetTuple(2, 1, 0, 1, 0, 1)},
        {'e', TetTuple(2, 1, 1, 1, 1, 2)},
    }};
    for (const auto& [tag, rep] : fixed)
        if (canonicalize(rep).tuple == c) return tag;
    const int total = c.total();
    if (total % 4 == 1 && total > 1) {
        const int r = (total - 1) / 4;
        if (canonicalize(TetTuple(0, r, r, r, r + 1, 0)).tuple == c) return 'f';
    }
    if (total % 4 == 3) {
        const int r = (total - 3) / 4;
        if (canonicalize(TetTuple(0, r, r + 1, r + 1, r + 1, 0)).tuple == c) return 'f';
    }
    return std::nullopt;
}

/// Raw inverse bumps of a facet: entries a_k > 0 become a_k + 1, zero entries
/// become 0 or 1 independently; other edges unchanged. No filtering.
inline std::vector<TetTuple> facet_bumps(const TetTuple& t, ReductionType ty) {
    std::vector<TetTuple> out;
    const auto edges = facet_edges(ty);
    for (unsigned choice = 0; choice < 8; ++choice) {
        std::array<int, 6> p = t.entries();
        bool dup = false;
        for (unsigned j = 0; j < 3; ++j) {
            const int k = edges[j];
            const bool bit = (choice >> j) & 1u;
            if (t[k] > 0) {
                if (bit) dup = true; // positive entries have a single option
                p[static_cast<std::size_t>(k)] = t[k] + 1;
            } else {
                p[static_cast<std::size_t>(k)] = bit ? 1 : 0;
            }
        }
        if (!dup) out.emplace_back(p);
    }
    return out;
}

struct Ascent {
    TetTuple parent;
    ReductionType type;
    auto operator<=>(const Ascent& o) const {
        if (auto c = parent <=> o.parent; c != 0) return c;
        return type <=> o.type;
    }
    bool operator==(const Ascent&) const = default;
};

/// Every parent J and type with apply_reduction(J, type) = t and deg F equal
/// to the required degree.
inline std::set<Ascent> ascent_candidates(const TetTuple& t, int required_f_degree) {
    std::set<Ascent> out;
    for (ReductionType ty : kReductionTypes) {
        for (const auto& p : facet_bumps(t, ty)) {
            if (p == t || !reduction_applicable(p, ty)) continue;
            const auto step = apply_reduction(p, ty);
            if (step.child == t && step.f_degree() == required_f_degree) out.insert({p, ty});
        }
    }
    return out;
}

inline constexpr int kEnumerationLevelCap = 10;

/// Canonical representatives of all curves with linear resolution obtained
/// from a minimal non-ACM curve by ascending basic double links.
inline std::set<TetTuple> enumerate_linear_in_class(const TetTuple& minimal) {
    if (!is_minimal(minimal)) {
        if (is_acm(minimal)) throw Error(ErrorKind::IsACM, to_string(minimal) + " is arithmetically Cohen-Macaulay");
        throw Error(ErrorKind::NotMinimal, to_string(minimal) + " is not minimal");
    }
    std::set<TetTuple> found = {canonicalize(minimal).tuple};
    std::map<TetTuple, TetTuple> level = {{canonicalize(minimal).tuple, minimal}};
    int degree = betti_table(minimal).min_generator_degree();
    for (int depth = 0; !level.empty(); ++depth) {
        if (depth >= kEnumerationLevelCap)
            throw Error(ErrorKind::EnumerationCap, "linear ascent did not terminate within the level cap");
        std::map<TetTuple, TetTuple> next;
        for (const auto& [canon, rep] : level) {
            for (const auto& asc : ascent_candidates(rep, degree + 1)) {
                if (!has_linear_resolution(asc.parent)) continue;
                const TetTuple c = canonicalize(asc.parent).tuple;
                if (found.insert(c).second) next.emplace(c, asc.parent);
            }
        }
        level = std::move(next);
        ++degree;
    }
    return found;
}

/// Betti table of gin(J): equal to J's when J is componentwise linear, else
/// r extra generators and syzygies one degree above the lowest generators.
inline BettiTable gin_betti_prediction(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "the trivial curve has no ideal");
    const auto base = resolution_base(reduction_trace(t));
    BettiTable b = recipe_from_trace(base).assemble();
    if (base.terminal_kind != TerminalKind::CIPower) return b;
    const int p = b.min_generator_degree();
    b.add(0, p + 1, base.ci_r);
    b.add(1, p + 1, base.ci_r);
    return b;
}

} // namespace tetra
