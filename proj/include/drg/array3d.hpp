#ifndef DRG_ARRAY3D_HPP
#define DRG_ARRAY3D_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace drg {

// Cubic three-dimensional array, indexed 0..dim-1 in each coordinate.
template <typename T>
class Array3D {
  public:
    Array3D() : dim_(0) {}
    explicit Array3D(size_t dim, const T& init = T())
        : dim_(dim), data_(dim * dim * dim, init) {}

    size_t dim() const { return dim_; }

    T& operator()(size_t a, size_t b, size_t c) { return data_[idx(a, b, c)]; }
    const T& operator()(size_t a, size_t b, size_t c) const {
        return data_[idx(a, b, c)];
    }

    bool operator==(const Array3D& o) const {
        return dim_ == o.dim_ && data_ == o.data_;
    }

  private:
    size_t idx(size_t a, size_t b, size_t c) const {
        if (a >= dim_ || b >= dim_ || c >= dim_)
            throw std::out_of_range("Array3D index");
        return (a * dim_ + b) * dim_ + c;
    }
    size_t dim_;
    std::vector<T> data_;
};

}  // namespace drg

#endif
