#pragma once

// Fiber-level multilinear algebra on the flat model: packed symmetric
// 2-tensors, trace / trace-free parts, divergence and symmetrized-gradient
// symbols, and the four-block splitting of the Sym^2 fiber over the (n+1)
// dimensional 0-cotangent space.
//
// Packing: entries (i,j) with i <= j in lexicographic order. Off-diagonal
// slots hold h_ij itself; inner products count them twice.
//
// Symbols use the real form: d/dy^k acts as multiplication by xi_k.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ahscatter/errors.hpp"
#include "ahscatter/exact.hpp"
#include "ahscatter/matrix.hpp"

namespace ahscatter {

/// Boundary dimension n (>= 3).
class Dim {
 public:
  explicit Dim(int n) : n_(n) {
    if (n < 3) throw DomainError("boundary dimension must satisfy n >= 3");
  }
  int value() const { return n_; }
  bool odd() const { return n_ % 2 == 1; }
  operator int() const { return n_; }  // NOLINT

  /// Throws DomainError for even n.
  void require_odd(const char* what) const;

 private:
  int n_;
};

/// Real covector xi on the flat boundary (g0 = Id).
class Covector {
 public:
  Covector() = default;
  explicit Covector(std::vector<double> c) : c_(std::move(c)) {}
  Covector(std::initializer_list<double> c) : c_(c) {}

  static Covector unit(int n, int axis) {
    std::vector<double> c(n, 0.0);
    c.at(axis) = 1.0;
    return Covector(std::move(c));
  }

  int dim() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[i]; }
  std::span<const double> components() const { return c_; }
  double norm_sq() const;
  double norm() const;
  Covector scaled(double t) const;

 private:
  std::vector<double> c_;
};

constexpr int packed_size(int m) { return m * (m + 1) / 2; }

/// Packed slot of (i,j) in an m-dimensional fiber; symmetric in (i,j).
constexpr int packed_index(int i, int j, int m) {
  if (i > j) std::swap(i, j);
  return i * m - i * (i - 1) / 2 + (j - i);
}

/// Inverse of packed_index.
std::array<int, 2> packed_pair(int slot, int m);

class Sym2Value {
 public:
  Sym2Value() = default;
  explicit Sym2Value(int dim) : dim_(dim), packed_(packed_size(dim), cplx(0.0)) {}
  Sym2Value(int dim, std::vector<cplx> packed);

  static Sym2Value identity(int dim);
  /// e_i (.) e_j: entries 1 on the diagonal when i == j, else 1/2 at (i,j) and (j,i).
  static Sym2Value unit(int dim, int i, int j);
  static Sym2Value diag(std::initializer_list<double> d);

  int dim() const { return dim_; }
  cplx operator()(int i, int j) const { return packed_[packed_index(i, j, dim_)]; }
  void set(int i, int j, cplx v) { packed_[packed_index(i, j, dim_)] = v; }
  std::span<const cplx> packed() const { return packed_; }
  std::vector<cplx>& packed_mut() { return packed_; }

  Sym2Value& operator+=(const Sym2Value& o);
  Sym2Value& operator-=(const Sym2Value& o);
  Sym2Value& operator*=(cplx s);
  friend Sym2Value operator+(Sym2Value a, const Sym2Value& b) { return a += b; }
  friend Sym2Value operator-(Sym2Value a, const Sym2Value& b) { return a -= b; }
  friend Sym2Value operator*(cplx s, Sym2Value a) { return a *= s; }

  double max_abs() const;

 private:
  int dim_ = 0;
  std::vector<cplx> packed_;
};

cplx trace(const Sym2Value& h);
Sym2Value tf(const Sym2Value& h);

/// sum_{i,j} h_ij conj(k_ij); off-diagonal entries counted twice.
cplx inner_product(const Sym2Value& h, const Sym2Value& k);

/// (D(xi) h)_j = sum_k xi_k h_kj.
std::vector<cplx> div_symbol(const Covector& xi, const Sym2Value& h);

/// S(xi) omega = (xi (x) omega + omega (x) xi) / 2.
Sym2Value sym_outer(const Covector& xi, std::span<const cplx> omega);
Sym2Value sym_outer(const Covector& xi, const Covector& omega);

/// Weights of the packed inner product: 1 on diagonal slots, 2 off-diagonal.
std::vector<double> packed_weights(int m);

/// Four-block decomposition W0 + W1 + W2 + W3 of Sym^2 over the (n+1)-fiber
/// (index 0 is the dx/x direction):
///   W0 = span{e00 + sum_i e_ii}          full trace direction
///   W1 = tangential trace-free tensors
///   W2 = span{n e00 - sum_i e_ii}
///   W3 = mixed directions e0 (.) e_i
/// Projectors are orthogonal for the packed inner product.
template <class T>
struct FiberBlocks {
  int n = 0;
  std::array<int, 4> dims{};
  std::array<Matrix<T>, 4> projectors;
};

template <class T>
FiberBlocks<T> make_fiber_blocks(Dim n) {
  const int m = n.value() + 1;
  const int N = packed_size(m);
  const int nv = n.value();
  FiberBlocks<T> fb;
  fb.n = nv;
  fb.dims = {1, nv * (nv + 1) / 2 - 1, 1, nv};

  std::vector<T> trace_dir(N, T(0)), split_dir(N, T(0));
  trace_dir[packed_index(0, 0, m)] = T(1);
  split_dir[packed_index(0, 0, m)] = T(nv);
  for (int i = 1; i < m; ++i) {
    trace_dir[packed_index(i, i, m)] = T(1);
    split_dir[packed_index(i, i, m)] = T(-1);
  }
  // Both directions are supported on diagonal slots (weight 1), so the
  // orthogonal projector is v v^T / |v|^2.
  auto rank_one = [&](const std::vector<T>& v, const T& norm_sq) {
    Matrix<T> p(N, N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (!(v[a] == T(0)) && !(v[b] == T(0))) p(a, b) = v[a] * v[b] / norm_sq;
    return p;
  };
  Matrix<T> p0 = rank_one(trace_dir, T(nv + 1));
  Matrix<T> p2 = rank_one(split_dir, T(static_cast<long>(nv) * nv + nv));
  Matrix<T> p3(N, N);
  for (int i = 1; i < m; ++i) {
    const int s = packed_index(0, i, m);
    p3(s, s) = T(1);
  }
  Matrix<T> p1 = Matrix<T>::identity(N) - p0 - p2 - p3;
  fb.projectors = {p0, p1, p2, p3};
  return fb;
}

FiberBlocks<cplx> fiber_blocks(Dim n);

}  // namespace ahscatter
