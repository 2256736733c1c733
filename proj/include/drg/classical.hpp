#ifndef DRG_CLASSICAL_HPP
#define DRG_CLASSICAL_HPP

#include "drg/intersection_array.hpp"

namespace drg {

// Classical parameters (d, b, alpha, beta) with Gaussian brackets
// [i] = (b^i - 1)/(b - 1).
struct ClassicalParams {
    int d;
    Int b;
    Rat alpha, beta;

    bool operator==(const ClassicalParams& o) const {
        return d == o.d && b == o.b && alpha == o.alpha && beta == o.beta;
    }
};

// All classical parameter tuples reproducing the array (d >= 3; for d <= 2
// the parametrization is not determined and none are reported).
std::vector<ClassicalParams> is_classical(const IntersectionArray& ia);

// Parameters (g, s, t) of a generalized g-gon of order (s, t) whose
// collinearity graph has this array.
struct GenPolyParams {
    int g;
    Int s, t;

    bool operator==(const GenPolyParams& o) const {
        return g == o.g && s == o.s && t == o.t;
    }
};
std::optional<GenPolyParams> gen_poly_params(const IntersectionArray& ia);

}  // namespace drg

#endif
