#pragma once

#include <optional>

#include "tetra/resolution.hpp"
#include "tetra/tuple.hpp"

namespace tetra {

struct ClassificationReport {
    bool trivial = false;
    bool acm = false;
    bool minimal = false;
    std::optional<int> buchsbaum_minimal_r;
    bool schwartau = false;
    bool componentwise_linear = false;
    bool linear_resolution = false;
    std::optional<int> ci_power_r;
    long long degree = 0;
    std::optional<int> regularity;
};

inline ClassificationReport classify(const TetTuple& t) {
    ClassificationReport r;
    r.degree = degree_of_tuple(t);
    if (t.is_trivial()) {
        r.trivial = true;
        return r;
    }
    r.acm = is_acm(t);
    r.minimal = is_minimal(t);
    r.buchsbaum_minimal_r = buchsbaum_minimal_form(t);
    r.schwartau = schwartau_status(t).is_schwartau;
    r.componentwise_linear = is_cwl(t);
    r.linear_resolution = has_linear_resolution(t);
    r.ci_power_r = ci_power_form(t);
    r.regularity = regularity_closed_form(t);
    return r;
}

} // namespace tetra
