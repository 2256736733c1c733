#ifndef DRG_LINALG_HPP
#define DRG_LINALG_HPP

#include <optional>

#include "drg/affine.hpp"

namespace drg {

using Matrix = std::vector<std::vector<Rat>>;

// Exact reduced row-echelon form; pivot column indices are strictly
// increasing.
struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
};
RrefResult rref(Matrix m);

// Solves A x = b exactly. Unknown i is named names[i]; non-pivot unknowns
// become free variables named t_<name>. Returns nullopt when inconsistent.
std::optional<ParamSolution> solve_affine(const Matrix& a,
                                          const std::vector<Rat>& b,
                                          const std::vector<std::string>& names);

}  // namespace drg

#endif
