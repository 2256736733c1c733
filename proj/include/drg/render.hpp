#ifndef DRG_RENDER_HPP
#define DRG_RENDER_HPP

#include <functional>
#include <optional>

#include "drg/affine.hpp"
#include "drg/spectrum.hpp"

namespace drg {

// Block layout used for all three-dimensional arrays: blocks by the first
// index, rows by the second, columns by the third. Entries are
// right-aligned to the widest entry of their block and blocks are
// separated by a blank line:
//
//   0: [ 1  0  0  0]
//      [ 0  5  0  0]
//      ...
std::string render_blocks(
    size_t dim,
    const std::function<std::string(size_t, size_t, size_t)>& entry);

std::string render_tensor(const Array3D<Int>& a);
std::string render_tensor(const Array3D<Rat>& a);
std::string render_tensor(const Array3D<AffineForm>& a);

// Matrix rows in bracket form with one global column width:
//   [    1     1     1     1]
//   [    1   2/5 -1/20  -1/5]
std::string render_matrix(const NFMatrix& m);

// DOT diagram of a distance partition. Without a distance, one cell per
// distance class from a single vertex (sizes k_i); with a distance W, one
// cell per pair (i, j) of distances from two vertices at distance W
// (sizes p^W_ij, empty cells omitted). Cells are joined when their index
// pairs differ by at most one in each coordinate.
std::string partition_dot(const IntersectionArray& ia,
                          std::optional<int> distance = std::nullopt);

}  // namespace drg

#endif
