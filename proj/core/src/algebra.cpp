#include "ahscatter/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ahscatter {

void Dim::require_odd(const char* what) const {
  if (!odd()) throw DomainError(std::string(what) + ": requires odd n, got n = " + std::to_string(n_));
}

double Covector::norm_sq() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return s;
}

double Covector::norm() const { return std::sqrt(norm_sq()); }

Covector Covector::scaled(double t) const {
  std::vector<double> c = c_;
  for (auto& v : c) v *= t;
  return Covector(std::move(c));
}

std::array<int, 2> packed_pair(int slot, int m) {
  int i = 0;
  while (slot >= m - i) {
    slot -= m - i;
    ++i;
  }
  return {i, i + slot};
}

Sym2Value::Sym2Value(int dim, std::vector<cplx> packed) : dim_(dim), packed_(std::move(packed)) {
  if (static_cast<int>(packed_.size()) != packed_size(dim))
    throw ContractViolation("Sym2Value: packed length " + std::to_string(packed_.size()) +
                            " does not match fiber dimension " + std::to_string(dim));
}

Sym2Value Sym2Value::identity(int dim) {
  Sym2Value h(dim);
  for (int i = 0; i < dim; ++i) h.set(i, i, 1.0);
  return h;
}

Sym2Value Sym2Value::unit(int dim, int i, int j) {
  Sym2Value h(dim);
  h.set(i, j, i == j ? 1.0 : 0.5);
  return h;
}

Sym2Value Sym2Value::diag(std::initializer_list<double> d) {
  Sym2Value h(static_cast<int>(d.size()));
  int i = 0;
  for (double v : d) h.set(i, i, v), ++i;
  return h;
}

Sym2Value& Sym2Value::operator+=(const Sym2Value& o) {
  if (o.dim_ != dim_) throw ContractViolation("Sym2Value: dimension mismatch");
  for (std::size_t a = 0; a < packed_.size(); ++a) packed_[a] += o.packed_[a];
  return *this;
}

Sym2Value& Sym2Value::operator-=(const Sym2Value& o) {
  if (o.dim_ != dim_) throw ContractViolation("Sym2Value: dimension mismatch");
  for (std::size_t a = 0; a < packed_.size(); ++a) packed_[a] -= o.packed_[a];
  return *this;
}

Sym2Value& Sym2Value::operator*=(cplx s) {
  for (auto& v : packed_) v *= s;
  return *this;
}

double Sym2Value::max_abs() const {
  double m = 0.0;
  for (const auto& v : packed_) m = std::max(m, std::abs(v));
  return m;
}

cplx trace(const Sym2Value& h) {
  cplx s = 0.0;
  for (int i = 0; i < h.dim(); ++i) s += h(i, i);
  return s;
}

Sym2Value tf(const Sym2Value& h) {
  const cplx t = trace(h) / static_cast<double>(h.dim());
  Sym2Value out = h;
  for (int i = 0; i < h.dim(); ++i) out.set(i, i, h(i, i) - t);
  return out;
}

cplx inner_product(const Sym2Value& h, const Sym2Value& k) {
  if (h.dim() != k.dim()) throw ContractViolation("inner_product: dimension mismatch");
  const int m = h.dim();
  cplx s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s += h(i, j) * std::conj(k(i, j));
  return s;
}

std::vector<cplx> div_symbol(const Covector& xi, const Sym2Value& h) {
  if (xi.dim() != h.dim()) throw ContractViolation("div_symbol: dimension mismatch");
  const int m = h.dim();
  std::vector<cplx> out(m, 0.0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) out[j] += xi[k] * h(k, j);
  return out;
}

Sym2Value sym_outer(const Covector& xi, std::span<const cplx> omega) {
  const int m = xi.dim();
  if (static_cast<int>(omega.size()) != m) throw ContractViolation("sym_outer: dimension mismatch");
  Sym2Value out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) out.set(i, j, 0.5 * (xi[i] * omega[j] + xi[j] * omega[i]));
  return out;
}

Sym2Value sym_outer(const Covector& xi, const Covector& omega) {
  std::vector<cplx> w(omega.components().begin(), omega.components().end());
  return sym_outer(xi, w);
}

std::vector<double> packed_weights(int m) {
  std::vector<double> w(packed_size(m), 2.0);
  for (int i = 0; i < m; ++i) w[packed_index(i, i, m)] = 1.0;
  return w;
}

FiberBlocks<cplx> fiber_blocks(Dim n) { return make_fiber_blocks<cplx>(n); }

}  // namespace ahscatter
