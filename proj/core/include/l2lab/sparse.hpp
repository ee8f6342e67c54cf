#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace l2lab {

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  std::int64_t value;
};

/// Sparse integer matrix in triplet form. After normalize(): sorted by
/// (col, row), no duplicate positions, no stored zeros.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Triplet> entries;

  void add(std::uint32_t r, std::uint32_t c, std::int64_t v) { entries.push_back({r, c, v}); }
  void normalize();
  std::size_t nonzeros() const { return entries.size(); }
};

/// A * B, exact in 64 bits (throws on overflow).
SparseIntMatrix multiply(const SparseIntMatrix& A, const SparseIntMatrix& B);
bool is_zero(const SparseIntMatrix& A);

/// Rank over F_p by sparse elimination; p must be prime and < 2^62.
std::size_t rank_mod_p(const SparseIntMatrix& A, std::uint64_t p);

/// Rank over Q as the largest rank over several primes near 2^61. Each
/// modular rank is a lower bound; they agree unless every prime divides a
/// particular minor, which is not observed at this scale.
std::size_t rank_rational(const SparseIntMatrix& A);

/// Exact rank over Q by fraction-free (Bareiss) elimination on a dense copy.
/// Intended for cross-checks on small matrices.
std::size_t rank_bareiss(const SparseIntMatrix& A);

/// Invariant factors d_1 | d_2 | ... (all nonzero, including ones) of the
/// Smith normal form. Their count is the rank over Q.
std::vector<mpz_class> smith_invariant_factors(const SparseIntMatrix& A);

}  // namespace l2lab
