#include "l2lab/torsion.hpp"

#include <algorithm>

#include "l2lab/error.hpp"

namespace l2lab {

namespace {

std::size_t entry(const std::vector<std::size_t>& v, int i) {
  return i >= 0 && static_cast<std::size_t>(i) < v.size() ? v[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

TorsionReport torsion_bookkeeping(const std::vector<std::pair<std::uint64_t, HomologySummary>>& chain, int n,
                                  std::uint64_t p) {
  if (chain.empty()) fail(ErrorCode::InconsistentChain, "chain is empty");
  TorsionReport r;
  r.p = p;
  r.n = n;
  std::uint64_t previous = 0;
  for (const auto& [index, s] : chain) {
    if (index == 0) fail(ErrorCode::InconsistentChain, "index 0");
    if (previous != 0 && (index <= previous || index % previous != 0))
      fail(ErrorCode::InconsistentChain,
           "index " + std::to_string(index) + " does not strictly refine " + std::to_string(previous));
    previous = index;
    auto fp = s.betti_Fp.find(p);
    if (fp == s.betti_Fp.end())
      fail(ErrorCode::InconsistentChain, "level of index " + std::to_string(index) + " has no F_" + std::to_string(p) + " Betti numbers");
    std::string why;
    if (!s.universal_coefficients_hold(&why))
      fail(ErrorCode::InconsistentChain, "universal coefficients fail at index " + std::to_string(index) + ": " + why);

    TorsionLevel level;
    level.index = index;
    const mpq_class idx(mpz_class(std::to_string(index)));
    for (std::size_t i = 0; i < s.betti_Q.size(); ++i) {
      const auto t = s.torsion_count(i, p);
      level.t.push_back(t);
      level.t_normalized.push_back(mpq_class(mpz_class(std::to_string(t))) / idx);
      level.betti_Q_normalized.push_back(mpq_class(mpz_class(std::to_string(s.betti_Q[i]))) / idx);
      level.betti_Fp_normalized.push_back(mpq_class(mpz_class(std::to_string(entry(fp->second, static_cast<int>(i))))) / idx);
      level.logtor_normalized.push_back(i < s.logtor.size() ? s.logtor[i] / static_cast<double>(index) : 0.0);
      if (t > 0) r.any_torsion = true;
    }
    r.levels.push_back(std::move(level));
  }

  const auto& last = chain.back().second;
  const auto& fp = last.betti_Fp.at(p);
  r.hypothesis_observed = entry(fp, n + 1) > entry(last.betti_Q, n + 1);
  const auto tn = n >= 0 ? last.torsion_count(static_cast<std::size_t>(n), p) : 0;
  r.torsion_observed = tn + last.torsion_count(static_cast<std::size_t>(n + 1), p) > 0;
  r.top_vanishing_observed = entry(fp, n + 2) == 0;

  if (!r.any_torsion)
    r.verdict = "no torsion growth";
  else if (r.hypothesis_observed && r.top_vanishing_observed && tn > 0)
    r.verdict = "evidence for t_n > 0";
  else if (r.hypothesis_observed)
    r.verdict = "evidence for t_n + t_{n+1} > 0";
  else
    r.verdict = "torsion present outside the lemma's hypothesis";
  return r;
}

}  // namespace l2lab
