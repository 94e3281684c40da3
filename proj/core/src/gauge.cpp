#include "ahscatter/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ahscatter/ode.hpp"

namespace ahscatter {

namespace {

long binomial(int b, int i) {
  long r = 1;
  for (int t = 1; t <= i; ++t) r = r * (b - i + t) / t;
  return r;
}

template <class T>
T power(const T& base, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

template <class T>
double mag(const std::vector<T>& v) {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, ScalarTraits<T>::magnitude(e));
  return m;
}

}  // namespace

template <class T>
void JetOperator<T>::add_term(int a, int b, const Matrix<T>& M) {
  if (M.rows() != rows_ || M.cols() != cols_) throw ContractViolation("JetOperator: term has wrong shape");
  auto it = terms_.find({a, b});
  if (it == terms_.end())
    terms_.emplace(std::make_pair(a, b), M);
  else
    it->second += M;
}

template <class T>
void JetOperator<T>::add_entry(int a, int b, int row, int col, const T& s) {
  auto it = terms_.find({a, b});
  if (it == terms_.end()) it = terms_.emplace(std::make_pair(a, b), Matrix<T>(rows_, cols_)).first;
  it->second(row, col) += s;
}

template <class T>
JetOperator<T>& JetOperator<T>::operator+=(const JetOperator& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw ContractViolation("JetOperator: shape mismatch");
  for (const auto& [key, M] : o.terms_) add_term(key.first, key.second, M);
  return *this;
}

template <class T>
JetOperator<T> JetOperator<T>::operator*(const T& s) const {
  JetOperator out = *this;
  for (auto& [key, M] : out.terms_) M *= s;
  return out;
}

template <class T>
JetOperator<T> JetOperator<T>::compose(const JetOperator& rhs) const {
  if (cols_ != rhs.rows_) throw ContractViolation("JetOperator::compose: inner fiber mismatch");
  JetOperator out(rows_, rhs.cols_);
  for (const auto& [k1, M] : terms_) {
    const auto [a, b] = k1;
    for (const auto& [k2, Nm] : rhs.terms_) {
      const auto [c, d] = k2;
      const Matrix<T> MN = M * Nm;
      // (theta + c)^b = sum_i C(b, i) c^{b-i} theta^i
      for (int i = 0; i <= b; ++i) {
        const T coef = T(binomial(b, i)) * power(T(c), b - i);
        if (coef == T(0)) continue;
        out.add_term(a + c, i + d, MN * coef);
      }
    }
  }
  return out;
}

template <class T>
JetSeries<T> JetOperator<T>::apply(const JetSeries<T>& in) const {
  if (in.fiber != cols_) throw ContractViolation("JetOperator::apply: fiber mismatch");
  JetSeries<T> out = JetSeries<T>::zeros(rows_, in.order);
  for (const auto& [key, M] : terms_) {
    const auto [a, b] = key;
    for (int k = 0; k + a <= in.order; ++k) {
      // theta on x^k (v0 + v1 log x) is [[k, 1], [0, k]] on (v0, v1).
      std::vector<T> v0 = in.at(k, 0), v1 = in.at(k, 1);
      for (int t = 0; t < b; ++t) {
        for (int i = 0; i < in.fiber; ++i) {
          v0[i] = T(k) * v0[i] + v1[i];
          v1[i] = T(k) * v1[i];
        }
      }
      out.at(k + a, 0) = add(out.at(k + a, 0), M.apply(v0));
      out.at(k + a, 1) = add(out.at(k + a, 1), M.apply(v1));
    }
  }
  return out;
}

template <class T>
double JetOperator<T>::max_difference(const JetOperator& o) const {
  JetOperator diff = *this;
  diff += o * T(-1);
  double m = 0.0;
  for (const auto& [key, M] : diff.terms_)
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < M.cols(); ++c) m = std::max(m, ScalarTraits<T>::magnitude(M(r, c)));
  return m;
}

template <class T>
bool JetOperator<T>::equals(const JetOperator& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  JetOperator diff = *this;
  diff += o * T(-1);
  for (const auto& [key, M] : diff.terms_)
    for (int r = 0; r < M.rows(); ++r)
      for (int c = 0; c < M.cols(); ++c)
        if (!ScalarTraits<T>::is_zero(M(r, c), 1e-4)) return false;
  return true;
}

template <class T>
JetOperator<T> model_J(Dim n, const std::vector<T>& xi) {
  const auto sys = build_J_system_t<T>(n, xi);
  const int m = sys.N;
  JetOperator<T> J(m, m);
  const Matrix<T> id = Matrix<T>::identity(m);
  J.add_term(0, 2, id * T(-1));
  J.add_term(0, 1, id * T(n.value()));
  J.add_term(2, 0, id * sys.xi_norm_sq);
  J.add_term(0, 0, sys.c0);
  J.add_term(1, 0, sys.c1);
  return J;
}

template <class T>
JetOperator<T> model_delta_star(Dim n, const std::vector<T>& xi) {
  const int m = n.value() + 1;
  if (static_cast<int>(xi.size()) != n.value()) throw ContractViolation("model_delta_star: xi has wrong dimension");
  const T half = T(1) / T(2);
  const T iu = ScalarTraits<T>::imag_unit();
  auto D = [&](int k) { return iu * xi[k - 1]; };
  auto P = [&](int a, int b) { return packed_index(a, b, m); };
  JetOperator<T> op(packed_size(m), m);
  // H00 = theta w0
  op.add_entry(0, 1, P(0, 0), 0, T(1));
  for (int j = 1; j < m; ++j) {
    // H0j = (theta w_j + w_j + x D_j w0) / 2
    op.add_entry(0, 1, P(0, j), j, half);
    op.add_entry(0, 0, P(0, j), j, half);
    op.add_entry(1, 0, P(0, j), 0, half * D(j));
  }
  for (int i = 1; i < m; ++i)
    for (int j = i; j < m; ++j) {
      // Hij = x (D_i w_j + D_j w_i) / 2 - delta_ij w0
      op.add_entry(1, 0, P(i, j), j, half * D(i));
      op.add_entry(1, 0, P(i, j), i, half * D(j));
      if (i == j) op.add_entry(0, 0, P(i, i), 0, T(-1));
    }
  return op;
}

template <class T>
JetOperator<T> model_bianchi(Dim n, const std::vector<T>& xi) {
  const int nv = n.value();
  const int m = nv + 1;
  if (static_cast<int>(xi.size()) != nv) throw ContractViolation("model_bianchi: xi has wrong dimension");
  const T half = T(1) / T(2);
  const T iu = ScalarTraits<T>::imag_unit();
  auto D = [&](int k) { return iu * xi[k - 1]; };
  auto P = [&](int a, int b) { return packed_index(a, b, m); };
  JetOperator<T> op(m, packed_size(m));
  // b0 = -theta H00 / 2 + n H00 + theta tr' / 2 - tr' - x sum_i D_i H_i0
  op.add_entry(0, 1, 0, P(0, 0), -half);
  op.add_entry(0, 0, 0, P(0, 0), T(nv));
  for (int i = 1; i < m; ++i) {
    op.add_entry(0, 1, 0, P(i, i), half);
    op.add_entry(0, 0, 0, P(i, i), T(-1));
    op.add_entry(1, 0, 0, P(i, 0), -D(i));
  }
  // b_j = -theta H0j + (n+1) H0j - x sum_i D_i H_ij + x D_j (H00 + tr') / 2
  for (int j = 1; j < m; ++j) {
    op.add_entry(0, 1, j, P(0, j), T(-1));
    op.add_entry(0, 0, j, P(0, j), T(nv + 1));
    for (int i = 1; i < m; ++i) op.add_entry(1, 0, j, P(i, j), -D(i));
    op.add_entry(1, 0, j, P(0, 0), half * D(j));
    for (int i = 1; i < m; ++i) op.add_entry(1, 0, j, P(i, i), half * D(j));
  }
  return op;
}

template <class T>
std::vector<T> embed_tangential(int n, const std::vector<T>& tangential) {
  if (static_cast<int>(tangential.size()) != packed_size(n))
    throw ContractViolation("embed_tangential: expected " + std::to_string(packed_size(n)) + " packed entries");
  const int m = n + 1;
  std::vector<T> out(packed_size(m), T(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out[packed_index(i + 1, j + 1, m)] = tangential[packed_index(i, j, n)];
  return out;
}

template <class T>
GaugeResult<T> gauge_jets(Dim n, const std::vector<T>& xi, const JetSeries<T>& h_tilde) {
  const int nv = n.value();
  const int m = nv + 1;
  const int N = packed_size(m);
  if (h_tilde.fiber != N) throw ContractViolation("gauge_jets: h_tilde must be packed over the (n+1)-fiber");

  // Truncate / pad to order n, then extend by an empty order n+1 slot so the
  // forcing is available through x^{n+1}.
  JetSeries<T> ht = JetSeries<T>::zeros(N, nv + 1);
  for (int k = 0; k <= std::min(nv, h_tilde.order); ++k) ht.at(k, 0) = h_tilde.at(k, 0);

  const auto J = model_J<T>(n, xi);
  const auto beta = model_bianchi<T>(n, xi);
  const auto dstar = model_delta_star<T>(n, xi);
  const JetSeries<T> F = (beta * T(2)).apply(ht);

  GaugeResult<T> r;
  r.omega = JetSeries<T>::zeros(m, nv + 1);

  // J on x^{n+1} log x e for a tangential unit vector e.
  {
    JetSeries<T> probe = JetSeries<T>::zeros(m, nv + 1);
    probe.at(nv + 1, 1)[1] = T(1);
    r.log_identity_constant = J.apply(probe).at(nv + 1, 0)[1];
  }

  auto f1 = [&](int k) { return T(-k * k + nv * k + 2 * nv); };
  auto f2 = [&](int k) { return T(-k * k + nv * k + nv + 1); };
  r.normal_factor = T(-1) / f1(nv + 1);
  r.normal_factor_printed = T(-1) / T(2 * nv);
  r.normal_factor_mismatch = !ScalarTraits<T>::is_zero(r.normal_factor - r.normal_factor_printed, 1e-4);

  for (int k = 0; k <= nv + 1; ++k) {
    const auto Jw = J.apply(r.omega);
    std::vector<T> R = add(Jw.at(k, 0), F.at(k, 0));
    if (k <= nv) {
      if (f1(k) == T(0) || f2(k) == T(0)) {
        std::ostringstream os;
        os << "gauge_jets: indicial matrix singular at order " << k;
        throw InternalError(os.str());
      }
      r.omega.at(k, 0)[0] = -R[0] / f1(k);
      for (int j = 1; j < m; ++j) r.omega.at(k, 0)[j] = -R[j] / f2(k);
    } else {
      r.omega.at(k, 0)[0] = r.normal_factor * R[0];
      r.log_coefficient.assign(nv, T(0));
      for (int j = 1; j < m; ++j) {
        r.omega.at(k, 1)[j] = -R[j] / r.log_identity_constant;
        r.log_coefficient[j - 1] = r.omega.at(k, 1)[j];
      }
    }
  }

  const auto hd = dstar.apply(r.omega);
  r.h = JetSeries<T>::zeros(N, nv);
  for (int k = 0; k <= nv; ++k) {
    r.h.at(k, 0) = add(ht.at(k, 0), hd.at(k, 0));
    r.h.at(k, 1) = hd.at(k, 1);
  }
  const auto bh = beta.apply(r.h);
  for (int k = 0; k <= nv; ++k)
    for (int j = 0; j < 2; ++j) r.bianchi_residual = std::max(r.bianchi_residual, mag(bh.at(k, j)));
  return r;
}

#define AHSCATTER_INSTANTIATE_GAUGE(T)                                                  \
  template class JetOperator<T>;                                                        \
  template JetOperator<T> model_J<T>(Dim, const std::vector<T>&);                       \
  template JetOperator<T> model_delta_star<T>(Dim, const std::vector<T>&);              \
  template JetOperator<T> model_bianchi<T>(Dim, const std::vector<T>&);                 \
  template std::vector<T> embed_tangential<T>(int, const std::vector<T>&);              \
  template GaugeResult<T> gauge_jets<T>(Dim, const std::vector<T>&, const JetSeries<T>&);

AHSCATTER_INSTANTIATE_GAUGE(cplx)
AHSCATTER_INSTANTIATE_GAUGE(QComplex)

#undef AHSCATTER_INSTANTIATE_GAUGE

}  // namespace ahscatter
