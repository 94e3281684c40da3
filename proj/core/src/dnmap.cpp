#include "ahscatter/dnmap.hpp"

#include <algorithm>
#include <cmath>

#include "ahscatter/specfun.hpp"

namespace ahscatter {

namespace {

void require_dim(Dim n, const Covector& xi, const char* fn) {
  if (xi.dim() != n.value())
    throw ContractViolation(std::string(fn) + ": covector has dimension " + std::to_string(xi.dim()) +
                            ", expected " + std::to_string(n.value()));
}

void require_nonzero(const Covector& xi, const char* fn) {
  if (xi.norm_sq() == 0.0) throw SingularError(std::string(fn) + ": xi = 0");
}

Sym2Value unit_slot(int n, int slot) {
  Sym2Value h(n);
  h.packed_mut()[slot] = 1.0;
  return h;
}

Eigen::VectorXcd to_vec(std::span<const cplx> v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

Eigen::VectorXd weights(int n) {
  const auto w = packed_weights(n);
  return Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
}

// Linearized curvature of g = Id + h at mode xi, real-form symbol.
struct Curvature {
  int n;
  std::vector<cplx> R;  // n^4
  Eigen::MatrixXcd Ric, P;
  cplx S;
  cplx& r(int i, int j, int k, int l) { return R[((i * n + j) * n + k) * n + l]; }
};

Curvature linearized_curvature(const Covector& xi, const Sym2Value& h) {
  const int n = xi.dim();
  Curvature c{n, std::vector<cplx>(static_cast<std::size_t>(n) * n * n * n), Eigen::MatrixXcd::Zero(n, n),
              Eigen::MatrixXcd::Zero(n, n), 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          c.r(i, j, k, l) =
              0.5 * (xi[i] * xi[k] * h(j, l) + xi[j] * xi[l] * h(i, k) - xi[i] * xi[l] * h(j, k) - xi[j] * xi[k] * h(i, l));
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i) c.Ric(j, l) += c.r(i, j, i, l);
  c.S = c.Ric.trace();
  return c;
}

}  // namespace

Eigen::VectorXd to_eigen(const Covector& xi) {
  return Eigen::Map<const Eigen::VectorXd>(xi.components().data(), xi.dim());
}

Eigen::MatrixXd a_symbol(Dim n, const Covector& xi) {
  require_dim(n, xi, "a_symbol");
  const Eigen::VectorXd v = to_eigen(xi);
  return 0.5 * v.squaredNorm() * Eigen::MatrixXd::Identity(n, n) + (0.5 - 1.0 / n.value()) * v * v.transpose();
}

Eigen::MatrixXd a_symbol_composed(Dim n, const Covector& xi) {
  require_dim(n, xi, "a_symbol_composed");
  Eigen::MatrixXd out(n.value(), n.value());
  for (int k = 0; k < n.value(); ++k) {
    const auto col = div_symbol(xi, tf(sym_outer(xi, Covector::unit(n, k))));
    for (int j = 0; j < n.value(); ++j) out(j, k) = col[j].real();
  }
  return out;
}

Eigen::MatrixXd a_symbol_inverse(Dim n, const Covector& xi) {
  require_dim(n, xi, "a_symbol_inverse");
  require_nonzero(xi, "a_symbol_inverse");
  const Eigen::VectorXd v = to_eigen(xi);
  const double q = v.squaredNorm();
  const double nd = n.value();
  return (2.0 * q * Eigen::MatrixXd::Identity(n, n) - (nd - 2.0) / (nd - 1.0) * v * v.transpose()) / (q * q);
}

Sym2Map tf_map(int n) {
  const int N = packed_size(n);
  Sym2Map out(N, N);
  for (int s = 0; s < N; ++s) out.col(s) = to_vec(tf(unit_slot(n, s)).packed());
  return out;
}

Eigen::MatrixXcd s_map(const Covector& xi) {
  const int n = xi.dim();
  Eigen::MatrixXcd out(packed_size(n), n);
  for (int k = 0; k < n; ++k) out.col(k) = to_vec(sym_outer(xi, Covector::unit(n, k)).packed());
  return out;
}

Eigen::MatrixXcd d_map(const Covector& xi) {
  const int n = xi.dim();
  const int N = packed_size(n);
  Eigen::MatrixXcd out(n, N);
  for (int s = 0; s < N; ++s) {
    const auto col = div_symbol(xi, unit_slot(n, s));
    out.col(s) = to_vec(col);
  }
  return out;
}

Sym2Map theta_symbol(Dim n, const Covector& xi) {
  require_dim(n, xi, "theta_symbol");
  require_nonzero(xi, "theta_symbol");
  const Sym2Map T = tf_map(n);
  const Eigen::MatrixXcd Ainv = a_symbol_inverse(n, xi).cast<cplx>();
  return T - T * s_map(xi) * Ainv * d_map(xi) * T;
}

double dn_coefficient(Dim n) {
  n.require_odd("dn_coefficient");
  const double h = 0.5 * n.value();
  return std::pow(2.0, -n.value()) * gamma(-h) / gamma(h);
}

Sym2Map dn_symbol(Dim n, const Covector& xi) {
  const double c = dn_coefficient(n);
  return c * std::pow(xi.norm(), n.value()) * theta_symbol(n, xi);
}

double graham_constant(Dim n) {
  n.require_odd("graham_constant");
  if (n.value() < 5) throw DomainError("graham_constant: requires n >= 5 (the formula divides by n - 3)");
  const double h = 0.5 * n.value();
  return (n.value() - 2.0) * gamma(-h) / (std::pow(2.0, n.value()) * (n.value() - 3.0) * gamma(h));
}

Sym2Map sym2_adjoint(const Sym2Map& M) {
  const int N = static_cast<int>(M.rows());
  int n = 0;
  while (packed_size(n) < N) ++n;
  if (packed_size(n) != N || M.cols() != N) throw ContractViolation("sym2_adjoint: not a packed Sym^2 map");
  const Eigen::VectorXd w = weights(n);
  return w.cwiseInverse().asDiagonal() * M.adjoint() * w.asDiagonal();
}

Sym2Map sym2_action(const Eigen::MatrixXd& Q) {
  const int n = static_cast<int>(Q.rows());
  const int N = packed_size(n);
  Sym2Map out(N, N);
  for (int s = 0; s < N; ++s) {
    const auto [i, j] = packed_pair(s, n);
    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(n, n);
    E(i, j) = E(j, i) = 1.0;
    const Eigen::MatrixXd R = Q * E * Q.transpose();
    for (int t = 0; t < N; ++t) {
      const auto [a, b] = packed_pair(t, n);
      out(t, s) = R(a, b);
    }
  }
  return out;
}

Eigen::MatrixXcd weyl_symbol(Dim n, const Covector& xi) {
  require_dim(n, xi, "weyl_symbol");
  if (n.value() < 5) throw DomainError("weyl_symbol: requires n >= 5");
  const int nv = n.value();
  const int N = packed_size(nv);
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(nv) * nv * nv * nv, N);
  for (int s = 0; s < N; ++s) {
    auto c = linearized_curvature(xi, unit_slot(nv, s));
    c.P = (c.Ric - c.S / (2.0 * (nv - 1)) * Eigen::MatrixXcd::Identity(nv, nv)) / static_cast<double>(nv - 2);
    auto g = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        for (int k = 0; k < nv; ++k)
          for (int l = 0; l < nv; ++l) {
            const cplx kn = c.P(i, k) * g(j, l) + c.P(j, l) * g(i, k) - c.P(i, l) * g(j, k) - c.P(j, k) * g(i, l);
            out(((i * nv + j) * nv + k) * nv + l, s) = c.r(i, j, k, l) - kn;
          }
  }
  return out;
}

Sym2Map wstar_w(Dim n, const Covector& xi) {
  const Eigen::MatrixXcd W = weyl_symbol(n, xi);
  return weights(n).cwiseInverse().asDiagonal() * (W.adjoint() * W);
}

Sym2Map cotton_symbol(const Covector& xi) {
  if (xi.dim() != 3) throw DomainError("cotton_symbol: requires n = 3");
  constexpr int n = 3;
  const int N = packed_size(n);
  auto eps = [](int i, int j, int k) { return 0.5 * (i - j) * (j - k) * (k - i); };
  Sym2Map out(N, N);
  for (int s = 0; s < N; ++s) {
    auto c = linearized_curvature(xi, unit_slot(n, s));
    const Eigen::MatrixXcd P = c.Ric - c.S / 4.0 * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) C(i, j) += eps(i, k, l) * xi[k] * P(l, j);
    const Eigen::MatrixXcd Cs = 0.5 * (C + C.transpose());
    for (int t = 0; t < N; ++t) {
      const auto [a, b] = packed_pair(t, n);
      out(t, s) = Cs(a, b);
    }
  }
  return out;
}

Sym2Map cstar_c(const Covector& xi) {
  const Sym2Map C = cotton_symbol(xi);
  return sym2_adjoint(C) * C;
}

Sym2Map abs_cotton(const Covector& xi) {
  const Sym2Map M = cstar_c(xi);
  // Conjugate to a Hermitian matrix with the square-root weights.
  const Eigen::VectorXd w = weights(3).cwiseSqrt();
  Eigen::MatrixXcd H = w.asDiagonal() * M * w.cwiseInverse().asDiagonal();
  H = 0.5 * (H + H.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  Eigen::VectorXd ev = es.eigenvalues();
  const double top = std::max(ev.maxCoeff(), 0.0);
  for (auto& e : ev) e = e <= 1e-12 * top ? 0.0 : std::sqrt(e);
  const Eigen::MatrixXcd root = es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  return w.cwiseInverse().asDiagonal() * root * w.asDiagonal();
}

ProportionalityFit fit_to_theta(const Sym2Map& M, const Sym2Map& theta, double scale) {
  const Sym2Map B = scale * theta;
  const cplx num = (B.adjoint() * M).trace();
  const double den = B.squaredNorm();
  ProportionalityFit f;
  f.constant = den == 0.0 ? 0.0 : num.real() / den;
  const double mmax = M.cwiseAbs().maxCoeff();
  const double rmax = (M - f.constant * B).cwiseAbs().maxCoeff();
  f.residual = mmax == 0.0 ? rmax : rmax / mmax;
  return f;
}

ProportionalityFit weyl_check(Dim n, const Covector& xi) {
  require_nonzero(xi, "weyl_check");
  auto f = fit_to_theta(wstar_w(n, xi), theta_symbol(n, xi), std::pow(xi.norm_sq(), 2));
  f.printed = (n.value() - 3.0) / (n.value() - 2.0);
  return f;
}

CottonCheck cotton_check(const Covector& xi) {
  require_nonzero(xi, "cotton_check");
  CottonCheck c;
  c.fit = fit_to_theta(abs_cotton(xi), theta_symbol(Dim(3), xi), std::pow(xi.norm(), 3));
  c.fit.printed = 1.0;
  const Eigen::VectorXd w = weights(3).cwiseSqrt();
  Eigen::MatrixXcd H = w.asDiagonal() * cstar_c(xi) * w.cwiseInverse().asDiagonal();
  H = 0.5 * (H + H.adjoint()).eval();
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(H, Eigen::EigenvaluesOnly).eigenvalues();
  c.tt_eig_lo = ev[ev.size() - 2];
  c.tt_eig_hi = ev[ev.size() - 1];
  return c;
}

}  // namespace ahscatter
