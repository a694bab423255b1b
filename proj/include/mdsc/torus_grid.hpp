#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mdsc {

template <typename Scalar>
using DenseArray = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// D-dimensional discrete torus with L sections per axis (L^D sections total).
class GridShape {
 public:
  GridShape(int dim, int side) : dim_(dim), side_(side) {
    if (dim < 1) throw std::invalid_argument("grid dimension D must be >= 1");
    if (side < 1) throw std::invalid_argument("sections per axis L must be >= 1");
    std::int64_t n = 1;
    for (int a = 0; a < dim; ++a) {
      if (n > std::numeric_limits<std::int64_t>::max() / side)
        throw std::invalid_argument("section count L^D exceeds the index range");
      n *= side;
    }
    size_ = n;
  }

  int dim() const { return dim_; }
  int side() const { return side_; }
  std::int64_t size() const { return size_; }

  friend bool operator==(const GridShape&, const GridShape&) = default;

 private:
  int dim_;
  int side_;
  std::int64_t size_;
};

inline int wrap_coord(int c, int side) {
  int r = c % side;
  return r < 0 ? r + side : r;
}

/// Torus coordinate; every component lies in [0, L-1] by construction.
class TorusIndex {
 public:
  TorusIndex() = default;
  TorusIndex(std::initializer_list<int> raw, const GridShape& shape)
      : TorusIndex(std::span<const int>(raw.begin(), raw.size()), shape) {}
  TorusIndex(std::span<const int> raw, const GridShape& shape) {
    if (static_cast<int>(raw.size()) != shape.dim())
      throw std::invalid_argument("coordinate count does not match grid dimension");
    coords_.resize(raw.size());
    for (std::size_t a = 0; a < raw.size(); ++a) coords_[a] = wrap_coord(raw[a], shape.side());
  }

  const std::vector<int>& coords() const { return coords_; }
  int operator[](int axis) const { return coords_[axis]; }
  int dim() const { return static_cast<int>(coords_.size()); }

  friend auto operator<=>(const TorusIndex&, const TorusIndex&) = default;

 private:
  std::vector<int> coords_;
};

inline TorusIndex wrap(std::span<const int> raw, const GridShape& shape) {
  return TorusIndex(raw, shape);
}
inline TorusIndex wrap(std::initializer_list<int> raw, const GridShape& shape) {
  return TorusIndex(raw, shape);
}

/// Row-major flattening, axis 0 slowest.
inline std::int64_t flatten(const TorusIndex& idx, const GridShape& shape) {
  std::int64_t flat = 0;
  for (int a = 0; a < shape.dim(); ++a) flat = flat * shape.side() + idx[a];
  return flat;
}

inline TorusIndex unflatten(std::int64_t flat, const GridShape& shape) {
  std::vector<int> coords(shape.dim());
  for (int a = shape.dim() - 1; a >= 0; --a) {
    coords[a] = static_cast<int>(flat % shape.side());
    flat /= shape.side();
  }
  return TorusIndex(coords, shape);
}

/// Translate by an offset, wrapping on the torus.
inline TorusIndex translate(const TorusIndex& idx, std::span<const int> offset, const GridShape& shape) {
  std::vector<int> raw(idx.coords());
  for (int a = 0; a < shape.dim(); ++a) raw[a] += offset[a];
  return TorusIndex(raw, shape);
}

/// L-infinity distance between two sections on the torus.
inline int torus_linf_distance(const TorusIndex& a, const TorusIndex& b, const GridShape& shape) {
  int d = 0;
  for (int axis = 0; axis < shape.dim(); ++axis) {
    int diff = std::abs(a[axis] - b[axis]);
    diff = std::min(diff, shape.side() - diff);
    d = std::max(d, diff);
  }
  return d;
}

/// Dense real-valued function on the torus, flattened row-major (axis 0 slowest).
template <typename Scalar>
struct ScalarFieldT {
  GridShape shape;
  DenseArray<Scalar> values;

  Scalar& at(const TorusIndex& i) { return values[flatten(i, shape)]; }
  Scalar at(const TorusIndex& i) const { return values[flatten(i, shape)]; }
};

using ScalarField = ScalarFieldT<double>;

template <typename Scalar>
ScalarFieldT<Scalar> constant_field(const GridShape& shape, Scalar v) {
  return {shape, DenseArray<Scalar>::Constant(shape.size(), v)};
}

enum class WindowDirection { Forward, Backward };

/// Uniform box-window average over offsets j in [0, w-1]^D:
///   forward : out_i = (1/w^D) sum_j f_{i+j}
///   backward: out_i = (1/w^D) sum_j f_{i-j}
/// Evaluated as D successive one-axis sliding averages (the box kernel is
/// separable). Each window is summed by direct accumulation in a fixed order,
/// so results are bit-for-bit reproducible.
template <typename Scalar>
ScalarFieldT<Scalar> box_window_sum(const ScalarFieldT<Scalar>& field, int w, WindowDirection dir) {
  const int side = field.shape.side();
  const int dim = field.shape.dim();
  if (w < 1 || w > side) throw std::invalid_argument("window width must satisfy 1 <= w <= L");

  ScalarFieldT<Scalar> out = field;
  if (w == 1) return out;

  const std::int64_t total = field.shape.size();
  std::vector<Scalar> line(static_cast<std::size_t>(side + w - 1));
  DenseArray<Scalar> next(total);

  for (int axis = 0; axis < dim; ++axis) {
    std::int64_t stride = 1;
    for (int a = axis + 1; a < dim; ++a) stride *= side;
    const std::int64_t outer_count = total / (stride * side);

    for (std::int64_t outer = 0; outer < outer_count; ++outer) {
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        const std::int64_t base = outer * stride * side + inner;
        if (dir == WindowDirection::Forward) {
          for (int t = 0; t < side + w - 1; ++t)
            line[t] = out.values[base + static_cast<std::int64_t>(t % side) * stride];
          for (int t = 0; t < side; ++t) {
            Scalar s = 0;
            for (int j = 0; j < w; ++j) s += line[t + j];  // f(t), f(t+1), ...
            next[base + static_cast<std::int64_t>(t) * stride] = s / Scalar(w);
          }
        } else {
          // line[u] holds f((u - (w-1)) mod L); summing from the top of the
          // window downward visits f(t), f(t-1), ... exactly as the j index
          // ascends in sum_j f_{t-j}.
          for (int t = 0; t < side + w - 1; ++t)
            line[t] = out.values[base + static_cast<std::int64_t>((t + side - (w - 1)) % side) * stride];
          for (int t = 0; t < side; ++t) {
            Scalar s = 0;
            for (int j = 0; j < w; ++j) s += line[t + w - 1 - j];
            next[base + static_cast<std::int64_t>(t) * stride] = s / Scalar(w);
          }
        }
      }
    }
    out.values.swap(next);
  }
  return out;
}

/// Elementwise x^n for small nonnegative integer n, evaluated by repeated
/// multiplication in a fixed order (no libm pow).
template <typename Scalar>
DenseArray<Scalar> int_pow(const DenseArray<Scalar>& x, int n) {
  if (n < 0) throw std::invalid_argument("int_pow exponent must be nonnegative");
  if (n == 0) return DenseArray<Scalar>::Ones(x.size());
  DenseArray<Scalar> r = x;
  for (int k = 1; k < n; ++k) r *= x;
  return r;
}

inline double int_pow(double x, int n) {
  if (n < 0) throw std::invalid_argument("int_pow exponent must be nonnegative");
  if (n == 0) return 1.0;
  double r = x;
  for (int k = 1; k < n; ++k) r *= x;
  return r;
}

}  // namespace mdsc
