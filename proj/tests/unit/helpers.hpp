#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "ahscatter/algebra.hpp"

namespace testutil {

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline ahscatter::Covector random_covector(std::mt19937_64& g, int n) {
  std::vector<double> c(n);
  for (auto& v : c) v = uniform(g, -1.0, 1.0);
  return ahscatter::Covector(c);
}

inline ahscatter::Sym2Value random_sym2(std::mt19937_64& g, int n) {
  ahscatter::Sym2Value h(n);
  for (auto& v : h.packed_mut()) v = {uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)};
  return h;
}

// Full n x n matrix from packed storage, for oracle computations.
inline std::vector<std::vector<ahscatter::cplx>> unpack(const ahscatter::Sym2Value& h) {
  const int n = h.dim();
  std::vector<std::vector<ahscatter::cplx>> M(n, std::vector<ahscatter::cplx>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = h(i, j);
  return M;
}

inline ahscatter::Rational q(long p, long r = 1) {
  ahscatter::Rational x(p, r);
  x.canonicalize();
  return x;
}

}  // namespace testutil
