#include <catch_amalgamated.hpp>

#include <random>

#include "tetra/betti.hpp"
#include "tetra/ideal.hpp"
#include "tetra/resolution.hpp"

using namespace tetra;

namespace {
using T = TetTuple;
using B = BettiTable;
} // namespace

TEST_CASE("minimal curve and CI-power tables", "[resolution]") {
    CHECK(minimal_curve_betti(T(4, 1, 2, 1, 1, 5)) == B{{{0, 9}, 24}, {{1, 10}, 37}, {{2, 11}, 14}});
    CHECK(minimal_curve_betti(T(1, 0, 0, 0, 0, 1)) == B{{{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}});
    for (int r = 1; r <= 5; ++r)
        CHECK(minimal_curve_betti(T(r, 0, r - 1, r - 1, 0, r)) ==
              B{{{0, 2 * r}, 3 * r + 1}, {{1, 2 * r + 1}, 4 * r}, {{2, 2 * r + 2}, r}});
    CHECK_THROWS_AS(minimal_curve_betti(T(1, 2, 1, 2, 0, 2)), Error);

    CHECK(ci_power_betti(1) == B{{{0, 2}, 2}, {{1, 4}, 1}});
    CHECK(ci_power_betti(2) == B{{{0, 4}, 3}, {{1, 6}, 2}});
    CHECK(ci_power_betti(4) == B{{{0, 8}, 5}, {{1, 10}, 4}});
    CHECK_THROWS_AS(ci_power_betti(0), Error);
}

TEST_CASE("worked Betti tables", "[resolution]") {
    CHECK(betti_table(T(1, 2, 1, 2, 0, 2)) == B{{{0, 6}, 1}, {{0, 4}, 2}, {{0, 3}, 1}, {{1, 7}, 1}, {{1, 5}, 2}});
    CHECK(betti_table(T(1, 3, 4, 2, 3, 0)) == B{{{0, 8}, 1}, {{0, 7}, 1}, {{0, 6}, 3}, {{1, 9}, 1}, {{1, 8}, 3}});
    CHECK(betti_table(T(7, 5, 5, 2, 1, 6)) == B{{{0, 17}, 1},
                                                 {{0, 15}, 1},
                                                 {{0, 13}, 26},
                                                 {{1, 18}, 1},
                                                 {{1, 16}, 1},
                                                 {{1, 14}, 39},
                                                 {{2, 15}, 14}});
    CHECK(betti_table(T(0, 2, 2, 2, 2, 0)) == ci_power_betti(2));
    CHECK(betti_table(T(1, 0, 0, 0, 0, 0)) == B{{{0, 1}, 2}, {{1, 2}, 1}});
    CHECK_THROWS_AS(betti_table(T(0, 0, 0, 0, 0, 0)), Error);

    const auto rec = resolution_recipe(T(1, 2, 1, 2, 0, 2));
    CHECK(rec.base_kind == TerminalKind::Trivial);
    REQUIRE(rec.steps.size() == 3);
    CHECK(rec.steps[0].f_degree == 6);
    CHECK(rec.steps[0].shift_applied == 0);
    CHECK(rec.base_betti.shifted(3) == B{{{0, 3}, 1}});
}

TEST_CASE("builder equals oracle on small tuples", "[resolution][property]") {
    for (const auto& t : tuples_with_sum_at_most(5)) {
        if (t.is_trivial()) continue;
        INFO(t);
        REQUIRE(betti_table(t) == betti_table_oracle(ideal_of_tuple(t)));
    }
}

TEST_CASE("builder equals oracle on seeded random tuples", "[resolution][property]") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int n = 0; n < 40; ++n) {
        std::array<int, 6> e{};
        for (auto& v : e) v = entry(rng);
        const T t(e);
        if (t.is_trivial()) continue;
        INFO(t);
        REQUIRE(betti_table(t) == betti_table_oracle(ideal_of_tuple(t)));
    }
}

TEST_CASE("tie-breaks do not change the table", "[resolution][property]") {
    for (const auto& t : tuples_with_sum_at_most(6)) {
        if (t.is_trivial()) continue;
        const auto all = betti_tables_all_tiebreaks(t);
        REQUIRE(all.size() == 1);
        REQUIRE(*all.begin() == betti_table(t).entries());
    }
}

TEST_CASE("regularity of the table matches the closed form", "[resolution][property]") {
    for (const auto& t : tuples_with_sum_at_most(9)) {
        if (t.is_trivial()) continue;
        REQUIRE(betti_table(t).regularity() == regularity_closed_form(t));
    }
}

TEST_CASE("non-ACM tables have the mapping-cone shape", "[resolution][property]") {
    for (const auto& t : tuples_with_sum_at_most(9)) {
        if (t.is_trivial() || is_acm(t)) continue;
        const auto rec = resolution_recipe(t);
        REQUIRE(rec.base_kind == TerminalKind::MinimalCurve);
        // F degrees strictly decrease down the chain and stay above the base
        int below = rec.base_betti.min_generator_degree();
        for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it) {
            REQUIRE(it->f_degree > below);
            below = it->f_degree;
        }
        REQUIRE(betti_table(t).projective_dimension() == 2);
    }
}

TEST_CASE("linear resolutions", "[resolution]") {
    CHECK(has_linear_resolution(T(2, 1, 1, 1, 1, 2)));
    CHECK_FALSE(has_linear_resolution(T(1, 2, 1, 2, 0, 2)));
    CHECK(has_linear_resolution(T(3, 2, 1, 1, 2, 3)));
    CHECK_THROWS_AS(has_linear_resolution(T(0, 0, 0, 0, 0, 0)), Error);
}

TEST_CASE("ACM curves with linear resolution", "[resolution]") {
    CHECK(acm_linear_family(T(3, 0, 0, 0, 0, 0)) == 'a');
    CHECK(acm_linear_family(T(0, 0, 0, 0, 5, 0)) == 'a');
    CHECK(acm_linear_family(T(1, 1, 0, 1, 0, 0)) == 'b');
    CHECK(acm_linear_family(T(1, 1, 1, 1, 1, 1)) == 'c');
    CHECK(acm_linear_family(T(2, 1, 0, 1, 0, 1)) == 'd');
    CHECK(acm_linear_family(T(2, 1, 1, 1, 1, 2)) == 'e');
    CHECK_FALSE(acm_linear_family(T(2, 1, 1, 1, 1, 1)));
    CHECK_FALSE(has_linear_resolution(T(2, 1, 1, 1, 1, 1)));
    CHECK_FALSE(acm_linear_family(T(0, 0, 0, 0, 0, 0)));
    // chains of three lines and their ascents
    CHECK(acm_linear_family(T(1, 0, 0, 1, 0, 1)) == 'f');
    CHECK(acm_linear_family(T(1, 1, 0, 0, 0, 1)) == 'f');
    CHECK(acm_linear_family(T(0, 1, 1, 1, 2, 0)) == 'f');
    CHECK(acm_linear_family(T(0, 2, 3, 3, 3, 0)) == 'f');
    CHECK_FALSE(acm_linear_family(T(0, 2, 2, 2, 2, 0)));
    CHECK(betti_table_oracle(ideal_of_tuple(T(1, 0, 0, 1, 0, 1))) == B{{{0, 2}, 3}, {{1, 3}, 2}});
    CHECK(betti_table_oracle(ideal_of_tuple(T(0, 1, 2, 2, 2, 0))) == B{{{0, 4}, 5}, {{1, 5}, 4}});

    for (const auto& t : tuples_with_sum_at_most(12)) {
        if (t.is_trivial()) continue;
        REQUIRE((is_acm(t) && has_linear_resolution(t)) == acm_linear_family(t).has_value());
    }
}

TEST_CASE("ascent candidates", "[resolution]") {
    const auto lines = ascent_candidates(T(0, 0, 0, 0, 0, 0), 1);
    std::set<T> parents;
    for (const auto& a : lines) parents.insert(a.parent);
    CHECK(parents.size() == 6);
    for (const auto& p : parents) CHECK(p.total() == 1);

    bool found = false;
    for (const auto& a : ascent_candidates(T(1, 0, 0, 0, 0, 1), 3))
        found = found || (a.parent == T(2, 1, 0, 0, 0, 1) && a.type == ReductionType::A);
    CHECK(found);

    CHECK(ascent_candidates(T(0, 4, 4, 4, 4, 0), 10).size() > 0);
    for (const auto& a : ascent_candidates(T(0, 4, 4, 4, 4, 0), 10)) {
        const auto s = apply_reduction(a.parent, a.type);
        CHECK(s.child == T(0, 4, 4, 4, 4, 0));
        CHECK(s.f_degree() == 10);
    }
}

TEST_CASE("ascent candidates are exactly the round-trip parents", "[resolution][property]") {
    // brute force: every tuple one step above t with entries <= max+1
    for (const auto& t : tuples_with_sum_at_most(3)) {
        for (int deg = 0; deg <= 6; ++deg) {
            std::set<Ascent> brute;
            for (const auto& p : tuples_with_entries_at_most(t.max_entry() + 1))
                for (auto ty : kReductionTypes)
                    if (reduction_applicable(p, ty)) {
                        const auto s = apply_reduction(p, ty);
                        if (s.child == t && s.f_degree() == deg) brute.insert({p, ty});
                    }
            REQUIRE(ascent_candidates(t, deg) == brute);
        }
    }
}

TEST_CASE("raw facet bumps of large minimal curves are minimal", "[resolution][property]") {
    for (const auto& t : tuples_with_sum_at_most(12)) {
        if (!is_minimal(t)) continue;
        const auto [lo, hi] = normalized_pair(t);
        // rotate so the largest entry sits at edge 6 and its opposite at edge 1
        std::array<int, 6> e{};
        bool placed = false;
        for (const auto& p : all_vertex_permutations()) {
            const T u = act(p, t);
            if (u[5] == t[hi] && u[0] == t[lo]) {
                e = u.entries();
                placed = true;
                break;
            }
        }
        REQUIRE(placed);
        const bool slack = e[0] > std::max(e[2] + e[4] + 2, e[1] + e[3] + 2) &&
                           e[5] > std::max(e[3] + e[4] + 2, e[1] + e[2] + 2);
        if (!slack) continue;
        const T u(e);
        for (auto ty : kReductionTypes)
            for (const auto& b : facet_bumps(u, ty)) {
                if (b == u) continue;
                REQUIRE(is_minimal(b));
                REQUIRE(ascent_candidates(u, facet_weight(b, ty)).count({b, ty}) == 0);
            }
    }
}

TEST_CASE("enumeration of linear curves in an even liaison class", "[resolution]") {
    // (2,1,1,1,0,1) is arithmetically Cohen-Macaulay, so it cannot lie in
    // the class; (0,1,1,1,3,0) and (0,1,2,2,1,1) complete the list.
    CHECK(is_acm(T(2, 1, 1, 1, 0, 1)));
    std::set<T> expected;
    for (const T& t : {T(1, 0, 0, 0, 0, 1), T(2, 1, 0, 0, 0, 1), T(3, 1, 0, 1, 0, 1), T(2, 2, 0, 0, 0, 2),
                       T(0, 1, 1, 1, 3, 0), T(0, 1, 2, 2, 1, 1), T(3, 2, 0, 1, 1, 2), T(3, 2, 1, 1, 2, 3)})
        expected.insert(canonicalize(t).tuple);
    CHECK(enumerate_linear_in_class(T(1, 0, 0, 0, 0, 1)) == expected);
    for (const auto& t : expected) CHECK(betti_table_oracle(ideal_of_tuple(t)).is_linear());

    // (m,0,0,0,0,k) is alone in its class once both entries exceed 2
    CHECK(enumerate_linear_in_class(T(3, 0, 0, 0, 0, 3)) == std::set<T>{canonicalize(T(3, 0, 0, 0, 0, 3)).tuple});
    CHECK(enumerate_linear_in_class(T(4, 0, 0, 0, 0, 3)) == std::set<T>{canonicalize(T(4, 0, 0, 0, 0, 3)).tuple});
    // with an entry equal to 2 it is not
    CHECK(enumerate_linear_in_class(T(2, 0, 0, 0, 0, 2)).size() == 6);
    CHECK(enumerate_linear_in_class(T(2, 0, 0, 0, 0, 2)).count(canonicalize(T(0, 0, 3, 2, 1, 1)).tuple) == 1);

    const auto big = enumerate_linear_in_class(T(4, 1, 2, 1, 1, 5));
    CHECK(big.count(canonicalize(T(4, 1, 2, 1, 1, 5)).tuple) == 1);
    for (const auto& t : big) {
        CHECK(has_linear_resolution(t));
        CHECK(same_orbit(reduction_trace(t).terminal, T(4, 1, 2, 1, 1, 5)));
    }

    CHECK_THROWS_MATCHES(enumerate_linear_in_class(T(1, 2, 1, 2, 0, 2)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::IsACM; }));
    CHECK_THROWS_MATCHES(enumerate_linear_in_class(T(2, 1, 0, 0, 0, 1)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::NotMinimal; }));
}

TEST_CASE("enumeration matches a bounded brute-force search", "[resolution][property]") {
    for (const T& minimal : {T(1, 0, 0, 0, 0, 1), T(2, 0, 0, 0, 0, 2)}) {
        std::set<T> brute;
        for (const auto& t : tuples_with_entries_at_most(5)) {
            if (t.is_trivial() || is_acm(t)) continue;
            if (!same_orbit(reduction_trace(t).terminal, minimal)) continue;
            if (has_linear_resolution(t)) brute.insert(canonicalize(t).tuple);
        }
        CHECK(enumerate_linear_in_class(minimal) == brute);
    }
}

TEST_CASE("gin Betti prediction", "[resolution]") {
    const auto b = betti_table(T(2, 5, 5, 5, 5, 0));
    CHECK(b == B{{{0, 12}, 2}, {{0, 10}, 5}, {{1, 13}, 2}, {{1, 12}, 4}});
    auto expected = b;
    expected.add(0, 11, 4);
    expected.add(1, 11, 4);
    CHECK(gin_betti_prediction(T(2, 5, 5, 5, 5, 0)) == expected);

    for (int r = 1; r <= 4; ++r) {
        auto e = ci_power_betti(r);
        e.add(0, 2 * r + 1, r);
        e.add(1, 2 * r + 1, r);
        CHECK(gin_betti_prediction(T(0, r, r, r, r, 0)) == e);
    }
    CHECK(gin_betti_prediction(T(10, 1, 2, 3, 10, 1)) == betti_table(T(10, 1, 2, 3, 10, 1)));
    CHECK_THROWS_AS(gin_betti_prediction(T(0, 0, 0, 0, 0, 0)), Error);
}
