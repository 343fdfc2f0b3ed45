/**
 * The monomial ideal of a tetrahedral curve and Hilbert function data of
 * quotients R/I.
 */
#pragma once

#include <cstdlib>
#include <vector>

#include "tetra/monomial.hpp"
#include "tetra/tuple.hpp"

namespace tetra {

/// Intersection of (x,y)^{a_k} over the six coordinate lines; (1) for the
/// trivial tuple.
inline MonomialIdeal ideal_of_tuple(const TetTuple& t) {
    MonomialIdeal I = MonomialIdeal::unit();
    for (int k = 0; k < 6; ++k) {
        if (t[k] == 0) continue;
        const auto [x, y] = kEdges[static_cast<std::size_t>(k)];
        I = I.intersect(MonomialIdeal::power_of_pair(x, y, t[k]));
    }
    return I;
}

struct HilbertData {
    std::vector<long long> values;  // dim_k (R/I)_d for d = 0..upto
    std::vector<long long> h_vector; // second difference, trailing zeros dropped
    long long degree = 0;            // eventual first difference

    std::vector<long long> first_difference() const {
        std::vector<long long> out(values.size());
        for (std::size_t d = 0; d < values.size(); ++d) out[d] = values[d] - (d ? values[d - 1] : 0);
        return out;
    }
};

/// Hilbert function of R/I by counting standard monomials. The first
/// difference must be constant over the last two degrees by `upto`.
inline HilbertData hilbert_data(const MonomialIdeal& I, int upto) {
    if (upto < 2) throw Error(ErrorKind::BoundTooSmall, "hilbert_data needs upto >= 2");
    HilbertData h;
    for (int d = 0; d <= upto; ++d) h.values.push_back(I.standard_count(d));
    const auto diff = h.first_difference();
    const std::size_t n = diff.size();
    if (diff[n - 1] != diff[n - 2] || diff[n - 2] != diff[n - 3])
        throw Error(ErrorKind::BoundTooSmall,
                    "Hilbert function has not stabilized by degree " + std::to_string(upto));
    h.degree = diff[n - 1];
    for (std::size_t d = 0; d < n; ++d) h.h_vector.push_back(diff[d] - (d ? diff[d - 1] : 0));
    while (!h.h_vector.empty() && h.h_vector.back() == 0) h.h_vector.pop_back();
    return h;
}

/// A stabilization bound that is always sufficient for a tuple ideal.
inline int hilbert_bound(const TetTuple& t) {
    return t.is_trivial() ? 3 : regularity_closed_form(t) + 3;
}

} // namespace tetra
