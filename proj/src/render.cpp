#include "drg/render.hpp"

#include <sstream>

namespace drg {

std::string render_blocks(
    size_t dim,
    const std::function<std::string(size_t, size_t, size_t)>& entry) {
    std::ostringstream os;
    for (size_t b = 0; b < dim; ++b) {
        size_t width = 0;
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                width = std::max(width, entry(b, r, c).size());
        std::string prefix = std::to_string(b) + ": ";
        std::string indent(prefix.size(), ' ');
        if (b > 0) os << "\n";
        for (size_t r = 0; r < dim; ++r) {
            os << (r == 0 ? prefix : indent) << "[";
            for (size_t c = 0; c < dim; ++c) {
                std::string e = entry(b, r, c);
                if (c > 0) os << " ";
                os << std::string(width - e.size(), ' ') << e;
            }
            os << "]\n";
        }
    }
    return os.str();
}

std::string render_tensor(const Array3D<Int>& a) {
    return render_blocks(a.dim(), [&](size_t b, size_t r, size_t c) {
        return a(b, r, c).get_str();
    });
}

std::string render_tensor(const Array3D<Rat>& a) {
    return render_blocks(a.dim(), [&](size_t b, size_t r, size_t c) {
        return rat_str(a(b, r, c));
    });
}

std::string render_tensor(const Array3D<AffineForm>& a) {
    return render_blocks(a.dim(), [&](size_t b, size_t r, size_t c) {
        return a(b, r, c).str();
    });
}

std::string render_matrix(const NFMatrix& m) {
    size_t width = 0;
    for (const auto& row : m)
        for (const auto& e : row) width = std::max(width, e.str().size());
    std::ostringstream os;
    for (const auto& row : m) {
        os << "[";
        for (size_t c = 0; c < row.size(); ++c) {
            std::string e = row[c].str();
            if (c > 0) os << " ";
            os << std::string(width - e.size(), ' ') << e;
        }
        os << "]\n";
    }
    return os.str();
}

std::string partition_dot(const IntersectionArray& ia,
                          std::optional<int> distance) {
    int d = ia.d();
    std::ostringstream os;
    os << "graph distance_partition {\n";
    if (!distance) {
        os << "  label=\"distance partition of " << ia.str() << "\";\n";
        for (int i = 0; i <= d; ++i)
            os << "  c" << i << " [label=\"" << ia.kk(i).get_str()
               << "\"];\n";
        for (int i = 0; i < d; ++i)
            os << "  c" << i << " -- c" << i + 1 << ";\n";
        os << "}\n";
        return os.str();
    }
    int w = *distance;
    if (w < 0 || w > d)
        throw std::invalid_argument("partition distance out of range");
    os << "  label=\"distance partition of " << ia.str() << " at distance "
       << w << "\";\n";
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            if (ia.p()(w, i, j) > 0) cells.emplace_back(i, j);
    for (const auto& [i, j] : cells)
        os << "  c" << i << "_" << j << " [label=\""
           << ia.p()(w, i, j).get_str() << "\"];\n";
    for (size_t x = 0; x < cells.size(); ++x)
        for (size_t y = x + 1; y < cells.size(); ++y) {
            auto [i1, j1] = cells[x];
            auto [i2, j2] = cells[y];
            if (std::abs(i1 - i2) <= 1 && std::abs(j1 - j2) <= 1)
                os << "  c" << i1 << "_" << j1 << " -- c" << i2 << "_" << j2
                   << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace drg
