#include "ahscatter/indicial.hpp"

#include <cmath>
#include <sstream>

namespace ahscatter {

SpectralParam::SpectralParam(cplx lambda, double eps) : lambda_(lambda), eps_(eps) {
  if (!(eps > 0.0)) throw DomainError("SpectralParam: eps must be positive");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw DomainError("SpectralParam: lambda must be finite");
}

bool SpectralParam::in_region(Dim n) const {
  return lambda_.real() > n.value() - eps_ && std::abs(lambda_.imag()) < eps_;
}

void SpectralParam::require_region(Dim n) const {
  if (!in_region(n)) {
    std::ostringstream os;
    os << "lambda = " << lambda_.real() << (lambda_.imag() < 0 ? " - " : " + ") << std::abs(lambda_.imag())
       << "i is outside D_eps (Re lambda > " << n.value() - eps_ << ", |Im lambda| < " << eps_ << ")";
    throw DomainError(os.str());
  }
}

IndicialBlock make_indicial_block(int label, Dim n, cplx c) {
  const double nd = n.value();
  // Principal sqrt has Re >= 0, which is the holomorphic branch on D_eps.
  const cplx disc = std::sqrt(nd * nd + 4.0 * c);
  return {label, n.value(), c, 0.5 * (nd - disc), 0.5 * (nd + disc)};
}

std::array<int, 4> block_constants(Dim n) { return {2 * n.value(), 0, 2 * n.value(), n.value() + 1}; }

std::array<IndicialBlock, 2> indicial_roots_J(Dim n) {
  return {make_indicial_block(1, n, 2.0 * n.value()), make_indicial_block(2, n, n.value() + 1.0)};
}

std::array<IndicialBlock, 4> indicial_roots_L(Dim n, const SpectralParam& lambda) {
  lambda.require_region(n);
  const cplx l = lambda.value();
  const cplx shift = l * (static_cast<double>(n.value()) - l);
  const auto cb = block_constants(n);
  std::array<IndicialBlock, 4> out;
  for (int b = 0; b < 4; ++b) out[b] = make_indicial_block(b, n, static_cast<double>(cb[b]) - shift);
  // Block 1 has discriminant (2 lambda - n)^2; write its roots directly so
  // that the upper root is lambda on all of D_eps.
  out[1].lower = static_cast<double>(n.value()) - l;
  out[1].upper = l;
  return out;
}

bool ordering_check(Dim n, const SpectralParam& lambda) {
  constexpr double slack = 1e-12;
  const auto b = indicial_roots_L(n, lambda);
  const double lr = lambda.value().real();
  const double s1 = b[1].upper.real();
  const double s3 = b[3].upper.real();
  const double s0 = b[0].upper.real();
  const double s2 = b[2].upper.real();
  return std::abs(lr - s1) <= slack && s1 < s3 && s3 < s0 && std::abs(s0 - s2) <= slack && s0 < lr + 2.0;
}

}  // namespace ahscatter
