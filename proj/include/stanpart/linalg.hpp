#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace stanpart {

inline constexpr std::size_t kMatrixDimCap = 2000;

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Exact rank over the rationals by fraction-free (Bareiss) elimination with
/// full pivoting. Throws cap_exceeded beyond kMatrixDimCap per side.
std::size_t rank_rational(IntMatrix m);

/// Rank over GF(p), p an odd or even prime < 2^31.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

}  // namespace stanpart
