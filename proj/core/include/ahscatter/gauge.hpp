#pragma once

// Mode-level Bianchi gauge fixing on hyperbolic half-space
// x^{-2}(dx^2 + |dy|^2), in 0-frame components at a Fourier mode xi
// (d/dy -> i xi).
//
// Covector fiber: index 0 is dx/x, 1..n are dy^i/x. Sym^2 fiber: packed over
// the same (n+1) indices.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahscatter/algebra.hpp"

namespace ahscatter {

/// Truncated expansion sum_{k<=order} sum_{j<=1} c[k][j] x^k (log x)^j.
template <class T>
struct JetSeries {
  int fiber = 0;
  int order = 0;
  std::vector<std::array<std::vector<T>, 2>> coeffs;

  static JetSeries zeros(int fiber, int order) {
    JetSeries s;
    s.fiber = fiber;
    s.order = order;
    s.coeffs.resize(order + 1);
    for (auto& slot : s.coeffs)
      for (auto& v : slot) v.assign(fiber, T(0));
    return s;
  }
  std::vector<T>& at(int k, int j = 0) { return coeffs.at(k).at(j); }
  const std::vector<T>& at(int k, int j = 0) const { return coeffs.at(k).at(j); }
};

/// sum over (a, b) of x^a (x d/dx)^b M_{a,b}.
template <class T>
class JetOperator {
 public:
  JetOperator() = default;
  JetOperator(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, Matrix<T>>& terms() const { return terms_; }

  /// Accumulates x^a theta^b M.
  void add_term(int a, int b, const Matrix<T>& M);
  /// Entry-wise accumulation of s x^a theta^b e_{row} e_{col}^T.
  void add_entry(int a, int b, int row, int col, const T& s);

  JetOperator& operator+=(const JetOperator& o);
  JetOperator operator*(const T& s) const;
  /// Exact composition using theta^b x^c = x^c (theta + c)^b.
  JetOperator compose(const JetOperator& rhs) const;

  /// Applies to a jet; theta acts on x^k (log x)^j as k + d/d(log x).
  /// Output orders above in.order are dropped.
  JetSeries<T> apply(const JetSeries<T>& in) const;

  /// Coefficient-wise equality with zero terms ignored.
  bool equals(const JetOperator& o) const;
  /// Largest coefficient magnitude of this - o.
  double max_difference(const JetOperator& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Matrix<T>> terms_;
};

/// -(x d/dx)^2 + n x d/dx + x^2 |xi|^2 + c0 + x c1 on the covector fiber.
template <class T>
JetOperator<T> model_J(Dim n, const std::vector<T>& xi);
/// Symmetrized covariant derivative, covector -> Sym^2.
template <class T>
JetOperator<T> model_delta_star(Dim n, const std::vector<T>& xi);
/// beta h = delta h + (1/2) d tr h with delta h = -nabla^i h_{ij}, Sym^2 -> covector.
template <class T>
JetOperator<T> model_bianchi(Dim n, const std::vector<T>& xi);

template <class T>
struct GaugeResult {
  JetSeries<T> omega;  // through order n + 1, log slot used only at n + 1
  JetSeries<T> h;      // through order n
  std::vector<T> log_coefficient;  // tangential omega-bar of x^{n+1} log x
  // Normal component at order n + 1: omega_0 = factor * v_0.
  T normal_factor;        // -1 / f1(n + 1) from the indicial matrix
  T normal_factor_printed;  // -1 / (2n)
  bool normal_factor_mismatch = false;
  // Coefficient of x^{n+1} in J(x^{n+1} log x e) for tangential e.
  T log_identity_constant;
  // max over k <= n of |beta(h)_k|.
  double bianchi_residual = 0.0;
};

/// Jet recursion J omega + 2 beta h_tilde = O(x^{n+2}) (with one log term at
/// x^{n+1}) and h = h_tilde + delta* omega. h_tilde holds packed Sym^2
/// coefficients over the (n+1)-fiber; orders above n are ignored.
template <class T>
GaugeResult<T> gauge_jets(Dim n, const std::vector<T>& xi, const JetSeries<T>& h_tilde);

/// Embeds tangential packed Sym^2 coefficients (n-fiber) into the (n+1)-fiber.
template <class T>
std::vector<T> embed_tangential(int n, const std::vector<T>& tangential);

}  // namespace ahscatter
