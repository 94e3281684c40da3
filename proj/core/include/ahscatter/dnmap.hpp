#pragma once

// Principal-symbol pipeline for the linearized Dirichlet-to-Neumann map at a
// flat boundary point: sigma_2(A), the TT projector Theta(xi), the constant
// c_n, and the Weyl / Cotton cross-checks.
//
// Sym2Map acts on packed coordinates of Sym^2(R^n) (entry h_ij in slot (i,j),
// i <= j). Adjoints use the packed inner product, weight 2 off the diagonal.

#include <Eigen/Dense>

#include "ahscatter/algebra.hpp"

namespace ahscatter {

using Sym2Map = Eigen::MatrixXcd;

Eigen::VectorXd to_eigen(const Covector& xi);

/// (1/2)|xi|^2 Id + (1/2 - 1/n) xi xi^T.
Eigen::MatrixXd a_symbol(Dim n, const Covector& xi);
/// D(xi) o tf o S(xi), assembled column by column from the algebra module.
Eigen::MatrixXd a_symbol_composed(Dim n, const Covector& xi);
/// |xi|^{-4} (2|xi|^2 Id - (n-2)/(n-1) xi xi^T). SingularError at xi = 0.
Eigen::MatrixXd a_symbol_inverse(Dim n, const Covector& xi);

/// Packed matrices of tf, S(xi) (covector -> Sym^2) and D(xi) (Sym^2 -> covector).
Sym2Map tf_map(int n);
Eigen::MatrixXcd s_map(const Covector& xi);
Eigen::MatrixXcd d_map(const Covector& xi);

/// tf - tf S A^{-1} D tf.
Sym2Map theta_symbol(Dim n, const Covector& xi);

/// 2^{-n} Gamma(-n/2) / Gamma(n/2); n odd.
double dn_coefficient(Dim n);
/// c_n |xi|^n Theta(xi).
Sym2Map dn_symbol(Dim n, const Covector& xi);
/// (n-2) Gamma(-n/2) / (2^n (n-3) Gamma(n/2)); n >= 5 odd.
double graham_constant(Dim n);

/// Adjoint for the packed inner product: W^{-1} M^H W, W = diag(1 or 2).
Sym2Map sym2_adjoint(const Sym2Map& M);
/// h -> Q h Q^T on packed coordinates.
Sym2Map sym2_action(const Eigen::MatrixXd& Q);

/// Linearized Weyl symbol at xi: rows index (i,j,k,l) as ((i n + j) n + k) n + l.
Eigen::MatrixXcd weyl_symbol(Dim n, const Covector& xi);
/// W* W with the full-contraction inner product on 4-tensors.
Sym2Map wstar_w(Dim n, const Covector& xi);

/// Linearized Cotton-York symbol (n = 3), Sym^2 -> Sym^2.
Sym2Map cotton_symbol(const Covector& xi);
Sym2Map cstar_c(const Covector& xi);
/// (C* C)^{1/2}; eigenvalues below 1e-12 of the largest are treated as 0.
Sym2Map abs_cotton(const Covector& xi);

struct ProportionalityFit {
  double constant = 0.0;  // least-squares c in M ~ c |xi|^p Theta
  double residual = 0.0;  // max |M - c |xi|^p Theta| / max |M|
  double printed = 0.0;
};

ProportionalityFit fit_to_theta(const Sym2Map& M, const Sym2Map& theta, double scale);

/// kappa with printed value (n-3)/(n-2).
ProportionalityFit weyl_check(Dim n, const Covector& xi);

struct CottonCheck {
  ProportionalityFit fit;  // mu with printed value 1
  double tt_eig_lo = 0.0;  // the two largest eigenvalues of C*C
  double tt_eig_hi = 0.0;
};
CottonCheck cotton_check(const Covector& xi);

}  // namespace ahscatter
