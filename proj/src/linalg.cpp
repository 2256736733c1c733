#include "drg/linalg.hpp"

namespace drg {

RrefResult rref(Matrix m) {
    if (m.empty() || m[0].empty())
        throw std::invalid_argument("rref: empty matrix");
    size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols)
            throw std::invalid_argument("rref: ragged matrix");
    std::vector<int> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::optional<ParamSolution> solve_affine(const Matrix& a,
                                          const std::vector<Rat>& b,
                                          const std::vector<std::string>& names) {
    if (a.size() != b.size())
        throw std::invalid_argument("solve_affine: row count mismatch");
    size_t cols = names.size();
    Matrix aug = a;
    for (size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != cols)
            throw std::invalid_argument("solve_affine: column count mismatch");
        aug[i].push_back(b[i]);
    }
    if (aug.empty()) {
        // no constraints: everything free
        ParamSolution sol;
        for (const auto& n : names) {
            sol.free_vars.push_back("t_" + n);
            sol.assignments.push_back(AffineForm::variable("t_" + n));
        }
        return sol;
    }
    RrefResult r = rref(std::move(aug));
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots) {
        if (p == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        is_pivot[p] = true;
    }
    ParamSolution sol;
    std::vector<std::string> free_name(cols);
    for (size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) {
            free_name[j] = "t_" + names[j];
            sol.free_vars.push_back(free_name[j]);
        }
    sol.assignments.assign(cols, AffineForm());
    for (size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) sol.assignments[j] = AffineForm::variable(free_name[j]);
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        int p = r.pivots[i];
        AffineForm f(r.reduced[i][cols]);
        for (size_t j = p + 1; j < cols; ++j)
            if (r.reduced[i][j] != 0)
                f -= r.reduced[i][j] * sol.assignments[j];
        sol.assignments[p] = std::move(f);
    }
    return sol;
}

}  // namespace drg
