#include "ahscatter/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

namespace ahscatter {

namespace {

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx gamma_right(cplx z) {
  z -= 1.0;
  cplx a = kLanczos[0];
  const cplx t = z + kLanczosG + 0.5;
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

using NoThrowPolicy = boost::math::policies::policy<
    boost::math::policies::domain_error<boost::math::policies::throw_on_error>,
    boost::math::policies::overflow_error<boost::math::policies::throw_on_error>,
    boost::math::policies::evaluation_error<boost::math::policies::throw_on_error>>;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " + std::to_string(x));
}

}  // namespace

cplx gamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw DomainError("gamma: pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    // Reflection.
    const cplx s = std::sin(std::numbers::pi * z);
    return std::numbers::pi / (s * gamma_right(1.0 - z));
  }
  return gamma_right(z);
}

double gamma(double x) { return gamma(cplx(x, 0.0)).real(); }

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("Bessel order must be a finite real >= 0");
}

bool BesselOrder::is_integer() const { return nu_ == std::floor(nu_); }

double bessel_i(BesselOrder nu, double x) {
  require_positive(x, "bessel_i");
  try {
    return boost::math::cyl_bessel_i(nu.value(), x, NoThrowPolicy());
  } catch (const std::exception& e) {
    throw DomainError(std::string("bessel_i: ") + e.what());
  }
}

double bessel_k(BesselOrder nu, double x) {
  require_positive(x, "bessel_k");
  if (nu.is_integer())
    throw ResonanceError("bessel_k: integer order " + std::to_string(nu.value()) + " is not supported");
  try {
    return boost::math::cyl_bessel_k(nu.value(), x, NoThrowPolicy());
  } catch (const std::exception& e) {
    throw DomainError(std::string("bessel_k: ") + e.what());
  }
}

double bessel_i_prime(BesselOrder nu, double x) {
  return bessel_i(BesselOrder(nu.value() + 1.0), x) + nu.value() / x * bessel_i(nu, x);
}

double bessel_k_prime(BesselOrder nu, double x) {
  return -bessel_k(BesselOrder(nu.value() + 1.0), x) + nu.value() / x * bessel_k(nu, x);
}

}  // namespace ahscatter
