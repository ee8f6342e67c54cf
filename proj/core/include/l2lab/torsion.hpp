#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "l2lab/homology.hpp"

namespace l2lab {

/// One cover of a chain; normalized quantities are divided by the index.
struct TorsionLevel {
  std::uint64_t index = 1;
  std::vector<std::size_t> t;  // t_i(p)
  std::vector<mpq_class> t_normalized;
  std::vector<mpq_class> betti_Q_normalized;
  std::vector<mpq_class> betti_Fp_normalized;
  std::vector<double> logtor_normalized;
  bool uc_ok = true;
};

/// Finite evidence for the torsion-growth lemma; every flag below refers to
/// the deepest level of the chain.
struct TorsionReport {
  std::uint64_t p = 2;
  int n = 0;
  std::vector<TorsionLevel> levels;
  /// b_{n+1}(F_p) / index > b_{n+1}(Q) / index.
  bool hypothesis_observed = false;
  /// t_n(p) + t_{n+1}(p) > 0.
  bool torsion_observed = false;
  /// b_{n+2}(F_p) = 0.
  bool top_vanishing_observed = false;
  /// Some level has some t_i(p) > 0.
  bool any_torsion = false;
  std::string verdict;
};

/// Throws InconsistentChain for an empty chain, indices that do not strictly
/// increase by divisibility, summaries lacking F_p data, or a failed
/// universal coefficient identity.
TorsionReport torsion_bookkeeping(const std::vector<std::pair<std::uint64_t, HomologySummary>>& chain, int n,
                                  std::uint64_t p);

}  // namespace l2lab
