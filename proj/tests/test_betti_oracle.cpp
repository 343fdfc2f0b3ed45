#include <catch_amalgamated.hpp>

#include "tetra/betti.hpp"
#include "tetra/ideal.hpp"

using namespace tetra;

namespace {

// Downward closure of the given maximal faces.
SimplicialComplex4 complex_of(std::initializer_list<unsigned> facets) {
    std::uint16_t mask = 0;
    for (unsigned f = 0; f < 16; ++f)
        for (unsigned g : facets)
            if ((f & g) == f) mask = static_cast<std::uint16_t>(mask | (1u << f));
    return SimplicialComplex4(mask);
}

// (1-t)^4 * HS(R/I) coefficient j, from the Hilbert function directly.
long long numerator_coefficient(const MonomialIdeal& I, int j) {
    static const long long c4[5] = {1, -4, 6, -4, 1};
    long long s = 0;
    for (int k = 0; k <= 4 && k <= j; ++k) s += c4[k] * I.standard_count(j - k);
    return s;
}

} // namespace

TEST_CASE("reduced homology conventions", "[betti]") {
    CHECK(reduced_homology_ranks(complex_of({0b1111})) == std::array<int, 4>{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(complex_of({0b0001, 0b0010})) == std::array<int, 4>{0, 1, 0, 0});
    CHECK(reduced_homology_ranks(complex_of({0})) == std::array<int, 4>{1, 0, 0, 0});
    CHECK(reduced_homology_ranks(SimplicialComplex4{}) == std::array<int, 4>{0, 0, 0, 0});
    CHECK(complex_of({0b0111}).is_downward_closed());
    CHECK_FALSE(SimplicialComplex4(0b1000).is_downward_closed());
    // boundary of a triangle and of a tetrahedron
    CHECK(reduced_homology_ranks(complex_of({0b0011, 0b0101, 0b0110})) == std::array<int, 4>{0, 0, 1, 0});
    CHECK(reduced_homology_ranks(complex_of({0b0111, 0b1011, 0b1101, 0b1110})) == std::array<int, 4>{0, 0, 0, 1});
}

TEST_CASE("upper Koszul complexes", "[betti]") {
    const auto K = upper_koszul(parse_ideal("a, b"), parse_monomial("a*b"));
    CHECK(K.has_face(0));
    CHECK(K.has_face(0b0001));
    CHECK(K.has_face(0b0010));
    CHECK_FALSE(K.has_face(0b0011));
    CHECK(reduced_homology_ranks(K)[1] == 1);

    const auto L = upper_koszul(parse_ideal("a"), parse_monomial("a"));
    CHECK(reduced_homology_ranks(L) == std::array<int, 4>{1, 0, 0, 0});

    const auto M = upper_koszul(parse_ideal("a*b, c*d"), parse_monomial("a*b*c*d"));
    CHECK(reduced_homology_ranks(M)[1] == 1);
}

TEST_CASE("oracle tables", "[betti]") {
    CHECK(betti_table_oracle(parse_ideal("a, b")) == BettiTable{{{0, 1}, 2}, {{1, 2}, 1}});
    CHECK(betti_table_oracle(parse_ideal("a")) == BettiTable{{{0, 1}, 1}});
    CHECK(betti_table_oracle(parse_ideal("a, b, c, d")) ==
          BettiTable{{{0, 1}, 4}, {{1, 2}, 6}, {{2, 3}, 4}, {{3, 4}, 1}});
    CHECK(betti_table_oracle(ideal_of_tuple(TetTuple(0, 2, 2, 2, 2, 0))) == BettiTable{{{0, 4}, 3}, {{1, 6}, 2}});
    CHECK(betti_table_oracle(ideal_of_tuple(TetTuple(4, 1, 2, 1, 1, 5))) ==
          BettiTable{{{0, 9}, 24}, {{1, 10}, 37}, {{2, 11}, 14}});
    CHECK(betti_table_oracle(ideal_of_tuple(TetTuple(1, 0, 0, 0, 0, 1))) ==
          BettiTable{{{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}});
}

TEST_CASE("table invariants", "[betti]") {
    const BettiTable b{{{0, 6}, 1}, {{0, 4}, 2}, {{0, 3}, 1}, {{1, 7}, 1}, {{1, 5}, 2}};
    CHECK(b.projective_dimension() == 1);
    CHECK(b.regularity() == 6);
    CHECK(b.min_generator_degree() == 3);
    CHECK(b.max_generator_degree() == 6);
    CHECK(b.generator_count() == 4);
    CHECK_FALSE(b.is_linear());
    CHECK(BettiTable({{{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}}).is_linear());
    CHECK_FALSE(BettiTable({{{0, 4}, 3}, {{1, 6}, 2}}).is_linear());
    CHECK(b.shifted(2).at(0, 8) == 1);
}

TEST_CASE("integer rank", "[betti]") {
    CHECK(detail::integer_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(detail::integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(detail::integer_rank({{2, 3, 1}, {4, 1, 0}, {6, 4, 1}}) == 2);
    CHECK(detail::integer_rank({}) == 0);
}

TEST_CASE("alternating sums reproduce the Hilbert series numerator", "[betti][property]") {
    for (const auto& t : tuples_with_sum_at_most(5)) {
        if (t.is_trivial()) continue;
        const auto I = ideal_of_tuple(t);
        const auto b = betti_table_oracle(I);
        const auto alt = b.alternating_sums();
        const int top = b.regularity() + b.projective_dimension() + 2;
        for (int j = 1; j <= top; ++j) {
            const auto it = alt.find(j);
            const long long sum = it == alt.end() ? 0 : it->second;
            REQUIRE(-sum == numerator_coefficient(I, j));
        }
        REQUIRE(numerator_coefficient(I, 0) == 1);
    }
}

TEST_CASE("componentwise linearity oracle agrees with the trace", "[betti][property]") {
    for (const auto& t : tuples_with_sum_at_most(4)) {
        if (t.is_trivial()) continue;
        const auto I = ideal_of_tuple(t);
        const int reg = regularity_closed_form(t);
        bool linear = true;
        for (int d = I.min_degree(); d <= reg && linear; ++d) linear = betti_table_oracle(I.component(d)).is_linear();
        REQUIRE(linear == is_cwl(t));
    }
}

TEST_CASE("projective dimension separates ACM curves", "[betti][property]") {
    for (const auto& t : tuples_with_sum_at_most(6)) {
        if (t.is_trivial()) continue;
        REQUIRE(betti_table_oracle(ideal_of_tuple(t)).projective_dimension() == (is_acm(t) ? 1 : 2));
    }
}
