/**
 * Reverse-lexicographic generic initial ideals of tetrahedral curves.
 *
 * ACM curves: gin is the lex ideal in k[a,b] whose artinian quotient has
 * the curve's h-vector. Non-ACM curves whose minimal curve is arithmetically
 * Buchsbaum: gin(J) = a*gin(I) + (b^e) along the maximal-weight trace, rooted
 * at the explicit recursion for (r,0,r-1,r-1,0,r).
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tetra/betti.hpp"
#include "tetra/error.hpp"
#include "tetra/ideal.hpp"
#include "tetra/monomial.hpp"
#include "tetra/tuple.hpp"

namespace tetra {

inline bool is_strongly_stable(const MonomialIdeal& I) {
    for (const auto& u : I.generators()) {
        for (int j = 1; j < kNumVars; ++j) {
            if (u[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial v = u;
                --v.exp[static_cast<std::size_t>(j)];
                ++v.exp[static_cast<std::size_t>(i)];
                if (!I.contains(v)) return false;
            }
        }
    }
    return true;
}

class StableIdeal {
public:
    explicit StableIdeal(MonomialIdeal I) : ideal_(std::move(I)) {
        if (!is_strongly_stable(ideal_)) throw Error(ErrorKind::NotStable, to_string(ideal_) + " is not strongly stable");
    }

    const MonomialIdeal& ideal() const { return ideal_; }

    /// Generators in lex-descending order (a > b > c > d).
    std::vector<Monomial> lex_generators() const {
        std::vector<Monomial> g(ideal_.generators().begin(), ideal_.generators().end());
        std::sort(g.begin(), g.end(), lex_greater);
        return g;
    }

    bool operator==(const StableIdeal&) const = default;

private:
    MonomialIdeal ideal_;
};

inline std::string to_string(const StableIdeal& S) {
    std::string s = "(";
    bool first = true;
    for (const auto& g : S.lex_generators()) {
        if (!first) s += ", ";
        s += to_string(g);
        first = false;
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const StableIdeal& S) { return os << to_string(S); }

inline long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Eliahou-Kervaire: each generator u contributes C(m(u)-1, i) in degree
/// deg u + i, m(u) the index (a=1..d=4) of the last variable dividing u.
inline BettiTable ek_betti(const MonomialIdeal& S) {
    if (!is_strongly_stable(S)) throw Error(ErrorKind::NotStable, to_string(S) + " is not strongly stable");
    BettiTable b;
    for (const auto& u : S.generators()) {
        const int m = u.max_var() + 1;
        for (int i = 0; i <= std::max(0, m - 1); ++i) b.add(i, u.degree() + i, binomial(std::max(0, m - 1), i));
    }
    return b;
}

inline BettiTable ek_betti(const StableIdeal& S) { return ek_betti(S.ideal()); }

/// The lex ideal of k[a,b] (inside k[a,b,c,d]) with the given artinian
/// h-vector: in degree d it spans the first d+1-h_d monomials of a^d > ... > b^d.
inline MonomialIdeal lex_ideal_from_h_vector(const std::vector<long long>& h) {
    std::vector<Monomial> gens;
    const int top = static_cast<int>(h.size()); // h_d = 0 from here on
    for (int d = 0; d <= top; ++d) {
        const long long hd = d < top ? h[static_cast<std::size_t>(d)] : 0;
        const long long count = d + 1 - hd;
        for (long long k = 0; k < count; ++k) gens.push_back(Monomial{{d - static_cast<int>(k), static_cast<int>(k), 0, 0}});
    }
    return MonomialIdeal(std::move(gens));
}

inline StableIdeal gin_acm(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "the trivial curve has no gin");
    if (!is_acm(t)) throw Error(ErrorKind::NotACM, to_string(t) + " is not arithmetically Cohen-Macaulay");
    const auto hd = hilbert_data(ideal_of_tuple(t), hilbert_bound(t));
    return StableIdeal(lex_ideal_from_h_vector(hd.h_vector));
}

inline StableIdeal gin_buchsbaum_minimal(int r) {
    if (r < 1) throw Error(ErrorKind::InvalidArgument, "gin_buchsbaum_minimal needs r >= 1");
    const Monomial a = Monomial::var(0), b = Monomial::var(1), c = Monomial::var(2);
    MonomialIdeal g({a * a, a * b, b * b, a * c});
    for (int k = 1; k < r; ++k) {
        // step k -> k+1
        g = g * Monomial::var(0, 2) +
            MonomialIdeal({a * Monomial::var(1, 2 * k + 1), Monomial::var(1, 2 * k + 2),
                           Monomial::var(0, k + 1) * Monomial::var(1, k) * c});
    }
    return StableIdeal(std::move(g));
}

inline StableIdeal gin_bdl_step(const StableIdeal& gin_child, int e) {
    return StableIdeal(gin_child.ideal() * Monomial::var(0) + MonomialIdeal({Monomial::var(1, e)}));
}

inline std::optional<StableIdeal> gin_of_curve(const TetTuple& t) {
    if (t.is_trivial()) throw Error(ErrorKind::TrivialCurve, "the trivial curve has no gin");
    const auto tr = reduction_trace(t);
    if (tr.terminal_kind == TerminalKind::Trivial) return gin_acm(t);
    const auto r = buchsbaum_minimal_form(tr.terminal);
    if (!r) return std::nullopt;
    StableIdeal g = gin_buchsbaum_minimal(*r);
    for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it) g = gin_bdl_step(g, max_facet_weight(it->parent));
    return g;
}

} // namespace tetra
