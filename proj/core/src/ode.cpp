#include "ahscatter/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint/integrate/integrate_adaptive.hpp>
#include <boost/numeric/odeint/stepper/controlled_runge_kutta.hpp>
#include <boost/numeric/odeint/stepper/generation.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_dopri5.hpp>

namespace ahscatter {

namespace {

template <class T>
using Vec = std::vector<T>;

template <class T>
void axpy(Vec<T>& y, const T& a, const Vec<T>& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!(x[i] == T(0))) y[i] += a * x[i];
}

template <class T>
double vec_mag(const Vec<T>& v) {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, ScalarTraits<T>::magnitude(e));
  return m;
}

template <class T>
bool vec_zero(const Vec<T>& v, double scale) {
  if constexpr (ScalarTraits<T>::exact) {
    return std::all_of(v.begin(), v.end(), [](const T& e) { return e == T(0); });
  } else {
    return vec_mag(v) <= 1e-12 * scale;
  }
}

template <class T>
bool indicial_vanishes(const T& f, const T& sigma) {
  if constexpr (ScalarTraits<T>::exact) {
    return f == T(0);
  } else {
    const double s = std::abs(ScalarTraits<T>::to_complex(sigma));
    return std::abs(f) < 1e-8 * std::max(1.0, s * s);
  }
}

template <class T>
T xi_sq(const std::vector<T>& xi) {
  T s(0);
  for (const auto& v : xi) s += v * v;
  return s;
}

std::vector<cplx> covector_to(const Covector& xi) {
  return {xi.components().begin(), xi.components().end()};
}

}  // namespace

template <class T>
OdeSystem<T> build_J_system_t(Dim n, const std::vector<T>& xi) {
  const int nv = n.value();
  if (static_cast<int>(xi.size()) != nv) throw ContractViolation("build_J_system: xi has wrong dimension");
  const int N = nv + 1;
  OdeSystem<T> sys;
  sys.n = nv;
  sys.N = N;
  sys.xi_norm_sq = xi_sq(xi);
  Matrix<T> pn(N, N), pt(N, N);
  pn(0, 0) = T(1);
  for (int j = 1; j < N; ++j) pt(j, j) = T(1);
  sys.blocks = {pn, pt};
  sys.block_c = {T(2 * nv), T(nv + 1)};
  sys.block_labels = {1, 2};
  sys.c0 = pn * T(2 * nv) + pt * T(nv + 1);
  sys.c1 = Matrix<T>(N, N);
  const T two_i = T(2) * ScalarTraits<T>::imag_unit();
  for (int j = 1; j < N; ++j) {
    sys.c1(0, j) = -(two_i * xi[j - 1]);
    sys.c1(j, 0) = two_i * xi[j - 1];
  }
  return sys;
}

template <class T>
OdeSystem<T> build_L_system_t(Dim n, const T& lambda, const std::vector<T>& xi) {
  const int nv = n.value();
  if (static_cast<int>(xi.size()) != nv) throw ContractViolation("build_L_system: xi has wrong dimension");
  const int m = nv + 1;
  const int N = packed_size(m);
  OdeSystem<T> sys;
  sys.n = nv;
  sys.N = N;
  sys.xi_norm_sq = xi_sq(xi);
  sys.shift = lambda * (T(nv) - lambda);
  auto fb = make_fiber_blocks<T>(n);
  const auto cb = block_constants(n);
  sys.c0 = Matrix<T>(N, N);
  for (int b = 0; b < 4; ++b) {
    sys.blocks.push_back(fb.projectors[b]);
    sys.block_c.push_back(T(cb[b]));
    sys.block_labels.push_back(b);
    sys.c0 += fb.projectors[b] * T(cb[b]);
  }

  // c1 = 2 E(h) with d/dy^k -> i xi_k, built column by column.
  const T iu = ScalarTraits<T>::imag_unit();
  std::vector<T> D(m, T(0));  // D[0] unused
  for (int k = 1; k < m; ++k) D[k] = iu * xi[k - 1];
  sys.c1 = Matrix<T>(N, N);
  for (int col = 0; col < N; ++col) {
    const auto [p, q] = packed_pair(col, m);
    auto h = [&](int a, int b) { return ((a == p && b == q) || (a == q && b == p)) ? T(1) : T(0); };
    std::vector<T> E(N, T(0));
    T e00(0);
    for (int k = 1; k < m; ++k) e00 -= T(2) * D[k] * h(k, 0);
    E[packed_index(0, 0, m)] = e00;
    for (int i = 1; i < m; ++i)
      for (int j = i; j < m; ++j) E[packed_index(i, j, m)] = D[i] * h(0, j) + D[j] * h(i, 0);
    for (int j = 1; j < m; ++j) {
      T e0j = D[j] * h(0, 0);
      for (int k = 1; k < m; ++k) e0j -= D[k] * h(k, j);
      E[packed_index(0, j, m)] = e0j;
    }
    for (int row = 0; row < N; ++row) sys.c1(row, col) = T(2) * E[row];
  }
  return sys;
}

template <class T>
OdeSystem<T> build_scalar_system_t(Dim n, const T& lambda, const T& xi_norm_sq) {
  OdeSystem<T> sys;
  sys.n = n.value();
  sys.N = 1;
  sys.xi_norm_sq = xi_norm_sq;
  sys.shift = lambda * (T(n.value()) - lambda);
  sys.c0 = Matrix<T>(1, 1);
  sys.c1 = Matrix<T>(1, 1);
  sys.blocks = {Matrix<T>::identity(1)};
  sys.block_c = {T(0)};
  sys.block_labels = {1};
  return sys;
}

OdeSystem<cplx> build_J_system(Dim n, const Covector& xi) { return build_J_system_t<cplx>(n, covector_to(xi)); }

OdeSystem<cplx> build_L_system(Dim n, const SpectralParam& lambda, const Covector& xi) {
  lambda.require_region(n);
  return build_L_system_t<cplx>(n, lambda.value(), covector_to(xi));
}

OdeSystem<cplx> build_scalar_system(Dim n, cplx lambda, double xi_norm) {
  return build_scalar_system_t<cplx>(n, lambda, cplx(xi_norm * xi_norm));
}

template <class T>
FrobeniusSeries<T> frobenius_series(const OdeSystem<T>& sys, const T& s, const std::vector<T>& leading, int order) {
  const int N = sys.N;
  if (static_cast<int>(leading.size()) != N) throw ContractViolation("frobenius_series: leading vector has wrong size");
  if (order < 0) throw ContractViolation("frobenius_series: order must be non-negative");
  const double lead_scale = vec_mag(leading);
  if (lead_scale == 0.0) throw ContractViolation("frobenius_series: leading vector is zero");

  const int nb = static_cast<int>(sys.blocks.size());
  for (int b = 0; b < nb; ++b) {
    const T f = block_indicial(sys, b, s);
    if (indicial_vanishes(f, s)) continue;
    if (!vec_zero(sys.blocks[b].apply(leading), lead_scale)) {
      std::ostringstream os;
      os << "frobenius_series: leading vector has a component in block " << sys.block_labels[b]
         << ", whose indicial value at s is nonzero";
      throw ContractViolation(os.str());
    }
  }

  FrobeniusSeries<T> out;
  out.s = s;
  out.N = N;
  out.order = order;
  out.coeffs.resize(order + 1);
  for (auto& slot : out.coeffs)
    for (auto& v : slot) v.assign(N, T(0));
  out.coeffs[0][0] = leading;

  int depth = 0;
  for (int k = 1; k <= order; ++k) {
    const T sigma = s + T(k);
    const T fp = T(sys.n) - T(2) * sigma;
    std::array<Vec<T>, kMaxLogDepth + 1> F;
    double fscale = 0.0;
    for (int j = 0; j <= depth; ++j) {
      F[j] = sys.c1.apply(out.coeffs[k - 1][j]);
      if (k >= 2) axpy(F[j], sys.xi_norm_sq, out.coeffs[k - 2][j]);
      for (auto& e : F[j]) e = -e;
      fscale = std::max(fscale, vec_mag(F[j]));
    }
    int new_depth = depth;
    auto& a = out.coeffs[k];
    for (int b = 0; b < nb; ++b) {
      const auto& P = sys.blocks[b];
      // Block-local slots 0..depth+2; higher ones start at zero.
      std::array<Vec<T>, kMaxLogDepth + 3> t;
      for (auto& v : t) v.assign(N, T(0));
      std::array<Vec<T>, kMaxLogDepth + 1> Fb;
      bool all_zero = true;
      for (int j = 0; j <= depth; ++j) {
        Fb[j] = P.apply(F[j]);
        if (!vec_zero(Fb[j], fscale)) all_zero = false;
      }
      const T f = block_indicial(sys, b, sigma);
      const bool resonant = indicial_vanishes(f, sigma);
      if (all_zero) {
        if (resonant) out.resonances.push_back({k, sys.block_labels[b], false});
        continue;
      }
      if (!resonant) {
        for (int j = depth; j >= 0; --j) {
          Vec<T> r = Fb[j];
          axpy(r, -(fp * T(j + 1)), t[j + 1]);
          axpy(r, T((j + 1) * (j + 2)), t[j + 2]);
          for (auto& e : r) e /= f;
          t[j] = std::move(r);
        }
      } else {
        int top;
        if (!indicial_vanishes(fp, sigma)) {
          for (int j = depth; j >= 0; --j) {
            Vec<T> r = Fb[j];
            axpy(r, T((j + 1) * (j + 2)), t[j + 2]);
            for (auto& e : r) e /= fp * T(j + 1);
            t[j + 1] = std::move(r);
          }
          top = depth + 1;
        } else {
          for (int j = depth; j >= 0; --j) {
            t[j + 2] = Fb[j];
            for (auto& e : t[j + 2]) e /= -T((j + 1) * (j + 2));
          }
          top = depth + 2;
        }
        int used = depth;
        for (int j = top; j > depth; --j)
          if (!vec_zero(t[j], fscale)) {
            used = j;
            break;
          }
        for (int j = used + 1; j <= top; ++j) t[j].assign(N, T(0));
        out.resonances.push_back({k, sys.block_labels[b], used > depth});
        if (used > kMaxLogDepth) {
          std::ostringstream os;
          os << "frobenius_series: log depth would exceed " << kMaxLogDepth << " at order " << k;
          throw ResonanceError(os.str());
        }
        new_depth = std::max(new_depth, used);
      }
      for (int j = 0; j <= std::min(kMaxLogDepth, depth + 2); ++j) a[j] = add(a[j], t[j]);
    }
    depth = new_depth;
  }
  out.log_depth = depth;
  return out;
}

template <class T>
std::vector<std::array<std::vector<T>, kMaxLogDepth + 1>> apply_system(const OdeSystem<T>& sys,
                                                                      const FrobeniusSeries<T>& series) {
  const int K = series.order;
  const int N = sys.N;
  using Jet = std::vector<std::array<Vec<T>, kMaxLogDepth + 1>>;
  // theta (x^sigma L^j) = sigma x^sigma L^j + j x^sigma L^{j-1}
  auto theta = [&](const Jet& y) {
    Jet out(K + 1);
    for (int k = 0; k <= K; ++k) {
      const T sigma = series.s + T(k);
      for (int j = 0; j <= kMaxLogDepth; ++j) {
        out[k][j] = scaled(y[k][j], sigma);
        if (j + 1 <= kMaxLogDepth) axpy(out[k][j], T(j + 1), y[k][j + 1]);
      }
    }
    return out;
  };
  const Jet& y = series.coeffs;
  const Jet ty = theta(y);
  const Jet tty = theta(ty);
  Jet out(K + 1);
  Matrix<T> base = sys.c0 - Matrix<T>::identity(N) * sys.shift;
  for (int k = 0; k <= K; ++k)
    for (int j = 0; j <= kMaxLogDepth; ++j) {
      Vec<T> r = base.apply(y[k][j]);
      axpy(r, T(-1), tty[k][j]);
      axpy(r, T(sys.n), ty[k][j]);
      if (k >= 1) r = add(r, sys.c1.apply(y[k - 1][j]));
      if (k >= 2) axpy(r, sys.xi_norm_sq, y[k - 2][j]);
      out[k][j] = std::move(r);
    }
  return out;
}

double series_residual(const OdeSystem<cplx>& sys, const FrobeniusSeries<cplx>& series) {
  const auto res = apply_system(sys, series);
  double rmax = 0.0, cmax = 0.0;
  for (int k = 0; k <= series.order; ++k)
    for (int j = 0; j <= kMaxLogDepth; ++j) {
      rmax = std::max(rmax, vec_mag(res[k][j]));
      cmax = std::max(cmax, vec_mag(series.coeffs[k][j]));
    }
  return cmax == 0.0 ? rmax : rmax / cmax;
}

template <class T>
SeriesValue evaluate_series(const FrobeniusSeries<T>& series, double x, double xi_norm, double guard) {
  if (!(x > 0.0)) throw DomainError("evaluate_series: x must be positive");
  SeriesValue out;
  out.value.assign(series.N, cplx(0.0));
  out.outside_guard = x * xi_norm > guard;
  const double L = std::log(x);
  cplx xs = std::pow(cplx(x), ScalarTraits<T>::to_complex(series.s));
  for (int k = 0; k <= series.order; ++k, xs *= x) {
    double Lj = 1.0;
    for (int j = 0; j <= series.log_depth; ++j, Lj *= L) {
      const cplx w = xs * Lj;
      const auto& c = series.coeffs[k][j];
      for (int i = 0; i < series.N; ++i) out.value[i] += ScalarTraits<T>::to_complex(c[i]) * w;
    }
  }
  return out;
}

template <class T>
std::vector<cplx> evaluate_series_theta(const FrobeniusSeries<T>& series, double x) {
  if (!(x > 0.0)) throw DomainError("evaluate_series_theta: x must be positive");
  std::vector<cplx> out(series.N, cplx(0.0));
  const double L = std::log(x);
  const cplx s = ScalarTraits<T>::to_complex(series.s);
  cplx xs = std::pow(cplx(x), s);
  for (int k = 0; k <= series.order; ++k, xs *= x) {
    const cplx sigma = s + static_cast<double>(k);
    for (int j = 0; j <= series.log_depth; ++j) {
      const cplx w = xs * (sigma * std::pow(L, j) + (j > 0 ? j * std::pow(L, j - 1) : 0.0));
      const auto& c = series.coeffs[k][j];
      for (int i = 0; i < series.N; ++i) out[i] += ScalarTraits<T>::to_complex(c[i]) * w;
    }
  }
  return out;
}

IntegrateResult integrate(const OdeSystem<cplx>& sys, double x0, const std::vector<cplx>& value,
                          const std::vector<cplx>& deriv, double x1, const IntegrateOptions& opts) {
  namespace odeint = boost::numeric::odeint;
  if (!(x0 > 0.0) || !(x1 > 0.0)) throw DomainError("integrate: endpoints must be positive");
  const int N = sys.N;
  if (static_cast<int>(value.size()) != N || static_cast<int>(deriv.size()) != N)
    throw ContractViolation("integrate: initial data has wrong size");

  // State (y, theta y) split into real and imaginary parts; theta = x d/dx = d/dt.
  using State = std::vector<double>;
  State st(4 * N);
  for (int i = 0; i < N; ++i) {
    st[2 * i] = value[i].real();
    st[2 * i + 1] = value[i].imag();
    const cplx z = x0 * deriv[i];
    st[2 * N + 2 * i] = z.real();
    st[2 * N + 2 * i + 1] = z.imag();
  }
  Matrix<cplx> base = sys.c0 - Matrix<cplx>::identity(N) * sys.shift;
  const double xi2 = sys.xi_norm_sq.real();
  std::vector<cplx> y(N), z(N);
  auto rhs = [&](const State& s, State& ds, double t) {
    const double x = std::exp(t);
    for (int i = 0; i < N; ++i) {
      y[i] = {s[2 * i], s[2 * i + 1]};
      z[i] = {s[2 * N + 2 * i], s[2 * N + 2 * i + 1]};
    }
    // theta^2 y = n theta y + (x^2 |xi|^2 + c0 - shift + x c1) y
    std::vector<cplx> acc = base.apply(y);
    const std::vector<cplx> cy = sys.c1.apply(y);
    for (int i = 0; i < N; ++i) {
      const cplx dz = static_cast<double>(sys.n) * z[i] + acc[i] + x * cy[i] + x * x * xi2 * y[i];
      ds[2 * i] = z[i].real();
      ds[2 * i + 1] = z[i].imag();
      ds[2 * N + 2 * i] = dz.real();
      ds[2 * N + 2 * i + 1] = dz.imag();
    }
  };

  auto stepper = odeint::make_controlled(opts.abs_tol, opts.rel_tol, odeint::runge_kutta_dopri5<State>());
  const double t0 = std::log(x0), t1 = std::log(x1);
  double t = t0;
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  double dt = dir * std::min(0.01, std::abs(t1 - t0) + 1e-300);
  long steps = 0;
  while (dir * (t1 - t) > 0.0) {
    if (dir * (t + dt - t1) > 0.0) dt = t1 - t;
    if (std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t)))
      throw IntegrationError("integrate: step size underflow at x = " + std::to_string(std::exp(t)));
    if (++steps > opts.max_steps) throw IntegrationError("integrate: step budget exhausted");
    stepper.try_step(rhs, st, t, dt);
    for (double v : st)
      if (!std::isfinite(v)) throw IntegrationError("integrate: solution is not finite");
  }

  IntegrateResult out;
  out.value.resize(N);
  out.deriv.resize(N);
  out.steps = steps;
  for (int i = 0; i < N; ++i) {
    out.value[i] = {st[2 * i], st[2 * i + 1]};
    out.deriv[i] = cplx(st[2 * N + 2 * i], st[2 * N + 2 * i + 1]) / x1;
  }
  return out;
}

#define AHSCATTER_INSTANTIATE_ODE(T)                                                                          \
  template OdeSystem<T> build_J_system_t<T>(Dim, const std::vector<T>&);                                      \
  template OdeSystem<T> build_L_system_t<T>(Dim, const T&, const std::vector<T>&);                            \
  template OdeSystem<T> build_scalar_system_t<T>(Dim, const T&, const T&);                                    \
  template FrobeniusSeries<T> frobenius_series<T>(const OdeSystem<T>&, const T&, const std::vector<T>&, int); \
  template std::vector<std::array<std::vector<T>, kMaxLogDepth + 1>> apply_system<T>(                         \
      const OdeSystem<T>&, const FrobeniusSeries<T>&);                                                        \
  template SeriesValue evaluate_series<T>(const FrobeniusSeries<T>&, double, double, double);                 \
  template std::vector<cplx> evaluate_series_theta<T>(const FrobeniusSeries<T>&, double);

AHSCATTER_INSTANTIATE_ODE(cplx)
AHSCATTER_INSTANTIATE_ODE(QComplex)

#undef AHSCATTER_INSTANTIATE_ODE

}  // namespace ahscatter
