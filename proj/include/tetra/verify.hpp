// Verification suites: each compares a closed form against an independent
// computation over every tuple up to a bound and records mismatches.
#pragma once

#include <array>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "tetra/betti.hpp"
#include "tetra/gin.hpp"
#include "tetra/groebner.hpp"
#include "tetra/ideal.hpp"
#include "tetra/resolution.hpp"
#include "tetra/tuple.hpp"

namespace tetra {

struct VerifyOptions {
    int bound = 5;
    std::uint64_t seed = 1;
    std::uint32_t prime = kDefaultPrime;
};

struct SuiteReport {
    std::string name;
    int bound = 0;
    long long cases = 0;
    long long mismatches = 0;
    std::vector<std::string> examples; // first few mismatches

    bool passed() const { return mismatches == 0; }

    void check(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++mismatches;
        if (examples.size() < 10) examples.push_back(what);
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"reduction", "betti",       "cwl",              "regularity",
                                                   "gin",       "enumeration", "liaison-addition", "truncation"};
    return names;
}

namespace detail {

inline std::string tag(const TetTuple& t) { return "(" + to_string(t) + ")"; }

inline std::uint32_t second_prime(std::uint32_t p) { return p == kSecondPrime ? kDefaultPrime : kSecondPrime; }

} // namespace detail

/// Traces terminate; each step is a basic double link with the maximal
/// facet weight as deg F; degree is additive and matches the Hilbert
/// polynomial; both minimality tests agree.
inline SuiteReport verify_reduction(const VerifyOptions& o) {
    SuiteReport r{"reduction", o.bound, 0, 0, {}};
    for (const auto& t : tuples_with_sum_at_most(o.bound)) {
        const std::string id = detail::tag(t);
        r.check(is_minimal(t) == is_minimal_numerical(t), id + " minimality tests disagree");
        if (t.is_trivial()) continue;
        const auto hd = hilbert_data(ideal_of_tuple(t), hilbert_bound(t));
        r.check(hd.degree == degree_of_tuple(t), id + " Hilbert degree differs from the closed form");
        const auto tr = reduction_trace(t);
        r.check(tr.terminal.is_trivial() == (tr.terminal_kind == TerminalKind::Trivial), id + " terminal kind");
        for (const auto& s : tr.steps) {
            const std::string sid = id + " step " + to_char(s.type) + " at " + detail::tag(s.parent);
            r.check(s.f_degree() == max_facet_weight(s.parent), sid + ": deg F is not the maximal facet weight");
            r.check(degree_of_tuple(s.parent) == degree_of_tuple(s.child) + s.f_degree(), sid + ": degree not additive");
            r.check(basic_double_link(ideal_of_tuple(s.child), s.G, s.F) == ideal_of_tuple(s.parent),
                    sid + ": ideal is not the basic double link of the child");
        }
    }
    return r;
}

/// Closed-form tables (every tie-break) against the Koszul oracle, over the
/// exhaustive range and 200 seeded random tuples with entries at most 4.
inline SuiteReport verify_betti(const VerifyOptions& o) {
    SuiteReport r{"betti", o.bound, 0, 0, {}};
    auto one = [&](const TetTuple& t) {
        if (t.is_trivial()) return;
        const auto oracle = betti_table_oracle(ideal_of_tuple(t));
        const auto built = betti_table(t);
        r.check(built == oracle, detail::tag(t) + " builder " + to_string(built) + " oracle " + to_string(oracle));
        for (const auto& e : betti_tables_all_tiebreaks(t))
            r.check(e == oracle.entries(), detail::tag(t) + " a tie-break choice gives a different table");
    };
    for (const auto& t : tuples_with_sum_at_most(o.bound)) one(t);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int n = 0; n < 200; ++n) {
        std::array<int, 6> e{};
        for (auto& v : e) v = entry(rng);
        one(TetTuple(e));
    }
    return r;
}

/// The trace criterion for componentwise linearity against linearity of
/// every component ideal from the least generator degree to the regularity.
inline SuiteReport verify_cwl(const VerifyOptions& o) {
    SuiteReport r{"cwl", o.bound, 0, 0, {}};
    for (const auto& t : tuples_with_sum_at_most(o.bound)) {
        if (t.is_trivial()) continue;
        const auto I = ideal_of_tuple(t);
        const int reg = betti_table_oracle(I).regularity();
        bool linear = true;
        for (int d = I.min_degree(); d <= reg && linear; ++d) linear = betti_table_oracle(I.component(d)).is_linear();
        r.check(linear == is_cwl(t), detail::tag(t) + " is_cwl " + (is_cwl(t) ? "true" : "false") +
                                         " but the component oracle says " + (linear ? "true" : "false"));
    }
    return r;
}

inline SuiteReport verify_regularity(const VerifyOptions& o) {
    SuiteReport r{"regularity", o.bound, 0, 0, {}};
    for (const auto& t : tuples_with_sum_at_most(o.bound)) {
        if (t.is_trivial()) continue;
        const int oracle = betti_table_oracle(ideal_of_tuple(t)).regularity();
        const int closed = regularity_closed_form(t);
        r.check(oracle == closed,
                detail::tag(t) + " closed form " + std::to_string(closed) + " oracle " + std::to_string(oracle));
    }
    return r;
}

/// Closed-form gins against the Groebner oracle (two seeds, two primes),
/// and Eliahou-Kervaire tables against the predicted gin tables.
inline SuiteReport verify_gin(const VerifyOptions& o) {
    SuiteReport r{"gin", o.bound, 0, 0, {}};
    const std::array<std::uint64_t, 2> seeds = {o.seed, o.seed + 1};
    const std::array<std::uint32_t, 2> primes = {o.prime, detail::second_prime(o.prime)};
    for (const auto& t : tuples_with_sum_at_most(o.bound)) {
        if (t.is_trivial()) continue;
        const auto g = gin_of_curve(t);
        if (!g) continue;
        const std::string id = detail::tag(t);
        try {
            const auto oracle = gin_oracle(ideal_of_tuple(t), seeds, primes);
            r.check(oracle == *g, id + " closed form " + to_string(*g) + " oracle " + to_string(oracle));
        } catch (const Error& e) {
            r.check(false, id + " oracle failed: " + e.what());
        }
        r.check(ek_betti(*g) == gin_betti_prediction(t), id + " Eliahou-Kervaire table differs from the prediction");
    }
    return r;
}

/// Linear curves in the class of each minimal curve, against a brute-force
/// search over all tuples with entries one above the largest found; and the
/// ACM classifier against the family tags.
inline SuiteReport verify_enumeration(const VerifyOptions& o) {
    SuiteReport r{"enumeration", o.bound, 0, 0, {}};
    std::set<TetTuple> minimal;
    for (const auto& t : tuples_with_sum_at_most(o.bound))
        if (is_minimal(t)) minimal.insert(canonicalize(t).tuple);
    for (const auto& m : minimal) {
        const auto found = enumerate_linear_in_class(m);
        int top = 0;
        for (const auto& t : found) top = std::max(top, t.max_entry());
        std::set<TetTuple> brute;
        for (const auto& t : tuples_with_entries_at_most(top + 1)) {
            if (t.is_trivial() || is_acm(t) || !same_orbit(reduction_trace(t).terminal, m)) continue;
            if (has_linear_resolution(t)) brute.insert(canonicalize(t).tuple);
        }
        r.check(found == brute, detail::tag(m) + " enumeration has " + std::to_string(found.size()) +
                                    " orbits, brute force " + std::to_string(brute.size()));
    }
    for (const auto& t : tuples_with_sum_at_most(o.bound + 3)) {
        if (t.is_trivial()) continue;
        r.check((is_acm(t) && has_linear_resolution(t)) == acm_linear_family(t).has_value(),
                detail::tag(t) + " ACM-linear classification");
    }
    return r;
}

/// (r+1,0,r,r,0,r+1) = (ac)(r,0,r-1,r-1,0,r) + (bd)^r (1,0,0,0,0,1) for r = 1..bound.
inline SuiteReport verify_liaison_addition(const VerifyOptions& o) {
    SuiteReport r{"liaison-addition", o.bound, 0, 0, {}};
    const auto skew = ideal_of_tuple(TetTuple(1, 0, 0, 0, 0, 1));
    for (int k = 1; k <= o.bound; ++k) {
        const auto lhs = ideal_of_tuple(TetTuple(k + 1, 0, k, k, 0, k + 1));
        const auto rhs = ideal_of_tuple(TetTuple(k, 0, k - 1, k - 1, 0, k)) * (Monomial::var(0) * Monomial::var(2)) +
                         skew * (Monomial::var(1, k) * Monomial::var(3, k));
        r.check(lhs == rhs, "r = " + std::to_string(k));
    }
    return r;
}

/// beta_{i,j}(I_{>=d}) = beta_{i,j}(I) whenever j - i >= d + 1.
inline SuiteReport verify_truncation(const VerifyOptions& o) {
    SuiteReport r{"truncation", o.bound, 0, 0, {}};
    for (const auto& t : tuples_with_sum_at_most(o.bound)) {
        if (t.is_trivial()) continue;
        const auto I = ideal_of_tuple(t);
        const auto full = betti_table_oracle(I);
        for (int d = 1; d <= full.regularity() + 1; ++d) {
            const auto trunc = betti_table_oracle(I.truncate(d));
            bool ok = true;
            for (const auto* tab : {&full, &trunc})
                for (const auto& [k, v] : tab->entries())
                    if (k.second - k.first >= d + 1 && full.at(k.first, k.second) != trunc.at(k.first, k.second)) ok = false;
            r.check(ok, detail::tag(t) + " d = " + std::to_string(d));
        }
    }
    return r;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
    static const std::map<std::string, std::function<SuiteReport(const VerifyOptions&)>> suites = {
        {"reduction", verify_reduction}, {"betti", verify_betti},
        {"cwl", verify_cwl},             {"regularity", verify_regularity},
        {"gin", verify_gin},             {"enumeration", verify_enumeration},
        {"liaison-addition", verify_liaison_addition}, {"truncation", verify_truncation},
    };
    const auto it = suites.find(name);
    if (it == suites.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
    return it->second(o);
}

} // namespace tetra
