#include "stanpart/linalg.hpp"

#include <stdexcept>

#include "stanpart/errors.hpp"

namespace stanpart {

namespace {

void check_caps(std::size_t rows, std::size_t cols) {
  if (rows > kMatrixDimCap || cols > kMatrixDimCap)
    throw cap_exceeded("matrix exceeds " + std::to_string(kMatrixDimCap) + " rows/cols");
}

}  // namespace

std::size_t rank_rational(IntMatrix m) {
  check_caps(m.rows, m.cols);
  std::size_t rank = 0;
  mpz_class prev = 1;
  while (rank < m.rows && rank < m.cols) {
    // Full pivot search over the remaining submatrix.
    std::size_t pr = m.rows, pc = m.cols;
    for (std::size_t i = rank; i < m.rows && pr == m.rows; ++i)
      for (std::size_t j = rank; j < m.cols; ++j)
        if (m.at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == m.rows) break;
    if (pr != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pr, j));
    if (pc != rank)
      for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, rank), m.at(i, pc));

    const mpz_class pivot = m.at(rank, rank);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = rank + 1; j < m.cols; ++j) {
        // One-step fraction-free update: stays integral by Sylvester's
        // determinant identity, dividing by the previous pivot.
        mpz_class t = m.at(i, j) * pivot - m.at(i, rank) * m.at(rank, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = std::move(t);
      }
      m.at(i, rank) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  check_caps(m.rows, m.cols);
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime");
  std::vector<std::uint64_t> a(m.rows * m.cols);
  for (std::size_t i = 0; i < m.rows * m.cols; ++i) {
    mpz_class r = m.a[i] % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    a[i] = r.get_ui();
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * m.cols + j]; };

  auto inv_mod = [p](std::uint64_t x) {
    // Extended Euclid; p prime and x nonzero mod p.
    std::int64_t t = 0, nt = 1, r = p, nr = static_cast<std::int64_t>(x);
    while (nr != 0) {
      const std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pr = m.rows;
    for (std::size_t i = rank; i < m.rows; ++i)
      if (at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr == m.rows) continue;
    if (pr != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(at(rank, j), at(pr, j));
    const std::uint64_t inv = inv_mod(at(rank, col));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      if (at(i, col) == 0) continue;
      const std::uint64_t f = (at(i, col) * inv) % p;
      for (std::size_t j = col; j < m.cols; ++j)
        at(i, j) = (at(i, j) + (p - f) * at(rank, j)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace stanpart
