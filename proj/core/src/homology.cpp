#include "l2lab/homology.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <stdexcept>

#include "l2lab/error.hpp"

namespace l2lab {

namespace {

std::size_t matrix_rank(const SparseIntMatrix& A, std::optional<std::uint64_t> p) {
  return p ? rank_mod_p(A, *p) : rank_rational(A);
}

std::vector<std::size_t> betti_from_ranks(const CubeComplex& X, const std::vector<std::size_t>& rank) {
  // rank[k] = rank of ∂_k (rank[0] = 0), with ∂_{dim+1} = 0
  std::vector<std::size_t> b(X.counts.size());
  for (std::size_t k = 0; k < X.counts.size(); ++k) {
    const std::size_t next = k + 1 < rank.size() ? rank[k + 1] : 0;
    b[k] = X.counts[k] - rank[k] - next;
  }
  return b;
}

/// Prime factors of n found by trial division up to 10^6, with a primality
/// test on any cofactor that remains.
std::set<std::uint64_t> prime_factors(mpz_class n) {
  std::set<std::uint64_t> out;
  n = abs(n);
  for (unsigned long q = 2; q < 1'000'000 && n > 1; ++q) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      out.insert(q);
      while (mpz_divisible_ui_p(n.get_mpz_t(), q)) n /= q;
    }
    if (mpz_class(q) * q > n) break;
  }
  if (n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0 && mpz_fits_ulong_p(n.get_mpz_t()) &&
      n.get_ui() < (1UL << 62))
    out.insert(n.get_ui());
  return out;
}

}  // namespace

std::vector<std::size_t> betti(const CubeComplex& X, std::optional<std::uint64_t> p) {
  std::vector<std::size_t> rank(X.counts.size(), 0);
  for (std::size_t k = 1; k < X.counts.size(); ++k) rank[k] = matrix_rank(X.boundary[k], p);
  return betti_from_ranks(X, rank);
}

std::size_t HomologySummary::torsion_count(std::size_t degree, std::uint64_t p) const {
  if (degree >= torsion.size()) return 0;
  std::size_t n = 0;
  for (const auto& d : torsion[degree])
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) ++n;
  return n;
}

long long HomologySummary::euler() const {
  long long sum = 0;
  for (std::size_t i = 0; i < betti_Q.size(); ++i) sum += (i % 2 ? -1 : 1) * static_cast<long long>(betti_Q[i]);
  return sum;
}

bool HomologySummary::universal_coefficients_hold(std::string* why) const {
  for (const auto& [p, bp] : betti_Fp)
    for (std::size_t i = 0; i < betti_Q.size(); ++i) {
      const std::size_t expected = betti_Q[i] + torsion_count(i, p) + (i ? torsion_count(i - 1, p) : 0);
      if (bp[i] != expected) {
        if (why)
          *why = "degree " + std::to_string(i) + ", p = " + std::to_string(p) + ": b(F_p) = " +
                 std::to_string(bp[i]) + " but b(Q) + t_i + t_{i-1} = " + std::to_string(expected);
        return false;
      }
    }
  return true;
}

HomologySummary integral_homology(const CubeComplex& X, const std::vector<std::uint64_t>& extra_primes) {
  const std::size_t dims = X.counts.size();
  if (X.boundary.size() != dims) throw std::invalid_argument("cube complex needs one boundary matrix per dimension");
  HomologySummary H;
  std::vector<std::size_t> rank(dims, 0);
  H.torsion.assign(dims, {});
  H.logtor.assign(dims, 0.0);
  std::set<std::uint64_t> primes{2, 3, 5, 7};
  primes.insert(extra_primes.begin(), extra_primes.end());
  for (std::size_t k = 1; k < dims; ++k) {
    auto factors = smith_invariant_factors(X.boundary[k]);
    rank[k] = factors.size();
    for (const auto& d : factors)
      if (d > 1) {
        H.torsion[k - 1].push_back(d);
        H.logtor[k - 1] += std::log(d.get_d());
        for (auto q : prime_factors(d)) primes.insert(q);
      }
  }
  H.betti_Q = betti_from_ranks(X, rank);
  for (auto p : primes) H.betti_Fp[p] = betti(X, p);
  std::string why;
  if (!H.universal_coefficients_hold(&why)) throw std::logic_error("universal coefficient identity fails: " + why);
  return H;
}

GrowthSeries growth_series(const CubeComplex& base, const std::vector<std::vector<int>>& chain, std::uint64_t p,
                           unsigned jobs, std::size_t max_cells) {
  GrowthSeries G;
  G.p = p;
  if (chain.empty()) fail(ErrorCode::MalformedInput, "empty cover chain");
  std::vector<std::uint64_t> degrees;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::uint64_t d = 1;
    for (int k : chain[i])
      for (int j = 0; j < k; ++j) d *= p;
    degrees.push_back(d);
    if (i == 0) continue;
    const auto& prev = chain[i - 1];
    const auto& cur = chain[i];
    bool refines = cur.size() >= prev.size() && degrees[i] > degrees[i - 1];
    for (std::size_t j = 0; j < prev.size() && refines; ++j) refines = cur[j] >= prev[j];
    if (!refines)
      fail(ErrorCode::NotNested, "cover " + std::to_string(i) + " does not refine cover " + std::to_string(i - 1));
  }

  auto compute = [&](std::size_t i) {
    GrowthRow row;
    row.exponents = chain[i];
    row.degree = degrees[i];
    CubeComplex X = chain[i].empty() ? base : abelian_p_cover(base, p, chain[i], max_cells);
    row.index = X.index;
    row.summary = integral_homology(X, {p});
    const mpz_class idx(std::to_string(row.index));
    for (std::size_t k = 0; k < row.summary.betti_Q.size(); ++k) {
      row.betti_Q.push_back(mpq_class(mpz_class(std::to_string(row.summary.betti_Q[k])), idx));
      row.betti_Fp.push_back(mpq_class(mpz_class(std::to_string(row.summary.betti_Fp.at(p)[k])), idx));
      row.betti_Q.back().canonicalize();
      row.betti_Fp.back().canonicalize();
      row.logtor.push_back(row.summary.logtor[k] / static_cast<double>(row.index));
    }
    return row;
  };

  G.rows.resize(chain.size());
  const unsigned workers = std::max(1u, jobs);
  for (std::size_t start = 0; start < chain.size(); start += workers) {
    std::vector<std::future<GrowthRow>> batch;
    for (std::size_t i = start; i < std::min(chain.size(), start + workers); ++i)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, compute, i));
    for (std::size_t j = 0; j < batch.size(); ++j) G.rows[start + j] = batch[j].get();
  }

  for (std::size_t i = 1; i < G.rows.size(); ++i)
    for (std::size_t k = 0; k < G.rows[i].betti_Fp.size(); ++k)
      if (G.rows[i].betti_Fp[k] > G.rows[i - 1].betti_Fp[k])
        fail(ErrorCode::MonotonicityViolated, "normalized F_p Betti number in degree " + std::to_string(k) +
                                                  " increases at cover " + std::to_string(i));
  return G;
}

}  // namespace l2lab
