#pragma once

// Rectangular chart lattices and per-node fields with validity masks.

#include <Eigen/Core>
#include <Eigen/LU>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "solgeo/error.hpp"

namespace solgeo {

struct Chart;

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Pair of 2x2 blocks indexed by one chart direction: either Christoffel
/// symbols Gamma[k](i,j) or a covariant derivative (nabla_i A)[i](k,j).
using Mat2Pair = std::array<Mat2, 2>;

/// Node layout of a chart grid. Periodic directions hold n nodes over the
/// period (h = L/n); non-periodic ones include both endpoints (h = L/(n-1)).
struct Lattice {
  int ns = 0;
  int nt = 0;
  double s0 = 0.0;
  double t0 = 0.0;
  double hs = 0.0;
  double ht = 0.0;
  bool periodic_s = false;
  bool periodic_t = false;

  /// n nodes per direction. Throws InvalidArgument for n < 3.
  static Lattice for_chart(const Chart& chart, int n);

  std::size_t size() const { return static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(ns) + static_cast<std::size_t>(i);
  }
  double s(int i) const { return s0 + hs * i; }
  double t(int j) const { return t0 + ht * j; }
  /// Step along `dir` (0 = s, 1 = t).
  double h(int dir) const { return dir == 0 ? hs : ht; }
  bool closed() const { return periodic_s && periodic_t; }

  /// Index of node (i+di, j+dj), wrapping periodic directions; nullopt when
  /// the shift leaves a non-periodic range.
  std::optional<std::size_t> neighbor(int i, int j, int di, int dj) const;
  std::optional<std::size_t> shifted(int i, int j, int dir, int offset) const {
    return dir == 0 ? neighbor(i, j, offset, 0) : neighbor(i, j, 0, offset);
  }

  bool operator==(const Lattice&) const = default;
};

template <class T>
T zero_value() {
  if constexpr (std::is_arithmetic_v<T>) {
    return T{0};
  } else if constexpr (std::is_same_v<T, Mat2Pair>) {
    return Mat2Pair{Mat2::Zero(), Mat2::Zero()};
  } else if constexpr (requires { T::Zero(); }) {
    return T::Zero();
  } else {
    return T{};
  }
}

template <class T>
struct GridField {
  Lattice lattice;
  std::vector<T> values;
  std::vector<std::uint8_t> valid;

  GridField() = default;
  explicit GridField(const Lattice& l)
      : lattice(l), values(l.size(), zero_value<T>()), valid(l.size(), 0) {}

  std::size_t size() const { return values.size(); }
  bool is_valid(std::size_t k) const { return valid[k] != 0; }
  void set(std::size_t k, const T& v) {
    values[k] = v;
    valid[k] = 1;
  }
  const T& operator[](std::size_t k) const { return values[k]; }
  std::size_t count_valid() const {
    std::size_t n = 0;
    for (auto v : valid) n += v;
    return n;
  }
};

template <class A, class B>
void require_same_lattice(const GridField<A>& a, const GridField<B>& b) {
  if (!(a.lattice == b.lattice)) throw InvalidArgument("grid fields live on different lattices");
}

/// Node-wise map over one or more fields; a node is valid only if it is
/// valid in every input.
template <class F, class First, class... Rest>
auto map_fields(F&& fn, const GridField<First>& first, const GridField<Rest>&... rest) {
  using Out = std::decay_t<decltype(fn(first.values[0], rest.values[0]...))>;
  (require_same_lattice(first, rest), ...);
  GridField<Out> out(first.lattice);
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (first.is_valid(k) && (rest.is_valid(k) && ...)) out.set(k, fn(first.values[k], rest.values[k]...));
  }
  return out;
}

/// Three-point central difference of `f` along `dir` at node (i,j).
/// Returns nullopt if either neighbour is missing or masked.
template <class T>
std::optional<T> central_difference(const GridField<T>& f, int i, int j, int dir) {
  const auto plus = f.lattice.shifted(i, j, dir, +1);
  const auto minus = f.lattice.shifted(i, j, dir, -1);
  if (!plus || !minus || !f.is_valid(*plus) || !f.is_valid(*minus)) return std::nullopt;
  return T((f.values[*plus] - f.values[*minus]) / (2.0 * f.lattice.h(dir)));
}

}  // namespace solgeo
