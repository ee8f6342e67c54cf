#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "l2lab/davis.hpp"

namespace l2lab {

/// Betti numbers over Q (nullopt) or F_p, degrees 0..dim.
std::vector<std::size_t> betti(const CubeComplex& X, std::optional<std::uint64_t> p = std::nullopt);

struct HomologySummary {
  std::vector<std::size_t> betti_Q;
  std::map<std::uint64_t, std::vector<std::size_t>> betti_Fp;
  /// Elementary divisors > 1 of H_i, per degree.
  std::vector<std::vector<mpz_class>> torsion;
  /// Σ log(divisor) per degree.
  std::vector<double> logtor;

  /// t_i(p): number of divisors in degree i divisible by p.
  std::size_t torsion_count(std::size_t degree, std::uint64_t p) const;
  long long euler() const;
  /// b_i(F_p) - b_i(Q) = t_i(p) + t_{i-1}(p) for every stored prime; the
  /// first violation is described in *why.
  bool universal_coefficients_hold(std::string* why = nullptr) const;
};

/// Smith normal form of every boundary map. F_p Betti numbers are computed
/// independently by modular elimination for 2, 3, 5, 7, every prime
/// dividing a divisor, and extra_primes; the universal coefficient identity
/// is then asserted (std::logic_error on failure).
HomologySummary integral_homology(const CubeComplex& X, const std::vector<std::uint64_t>& extra_primes = {});

struct GrowthRow {
  std::vector<int> exponents;  // empty for the base itself
  std::uint64_t degree = 1;
  std::uint64_t index = 1;     // base index times degree
  std::vector<mpq_class> betti_Q;   // normalized by index
  std::vector<mpq_class> betti_Fp;  // normalized, for the tower prime
  std::vector<double> logtor;       // normalized
  HomologySummary summary;
};

struct GrowthSeries {
  std::uint64_t p = 2;
  std::vector<GrowthRow> rows;
};

/// Homology along a tower of abelian p-covers of base, each given by its
/// exponent list. Throws NotNested unless exponents refine componentwise and
/// degrees strictly increase; MonotonicityViolated if a normalized F_p Betti
/// number increases. Covers are computed on up to `jobs` threads.
GrowthSeries growth_series(const CubeComplex& base, const std::vector<std::vector<int>>& chain, std::uint64_t p,
                           unsigned jobs = 1, std::size_t max_cells = max_cells_from_env());

}  // namespace l2lab
