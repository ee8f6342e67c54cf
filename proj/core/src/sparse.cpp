#include "l2lab/sparse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "l2lab/error.hpp"

namespace l2lab {

void SparseIntMatrix::normalize() {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> out;
  out.reserve(entries.size());
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) fail(ErrorCode::MalformedInput, "matrix entry out of range");
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col) {
      out.back().value += t.value;
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Triplet& t) { return t.value == 0; }), out.end());
  entries = std::move(out);
}

SparseIntMatrix multiply(const SparseIntMatrix& A, const SparseIntMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shapes do not match");
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> acol(A.cols);
  for (const auto& t : A.entries) acol[t.col].emplace_back(t.row, t.value);
  std::vector<std::map<std::uint32_t, __int128>> acc(B.cols);
  for (const auto& t : B.entries)
    for (const auto& [r, v] : acol[t.row]) acc[t.col][r] += static_cast<__int128>(v) * t.value;
  SparseIntMatrix C;
  C.rows = A.rows;
  C.cols = B.cols;
  constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
  for (std::uint32_t c = 0; c < B.cols; ++c)
    for (const auto& [r, v] : acc[c]) {
      if (v > lim || v < -lim) throw std::overflow_error("matrix product overflows 64 bits");
      if (v != 0) C.add(r, c, static_cast<std::int64_t>(v));
    }
  return C;
}

bool is_zero(const SparseIntMatrix& A) {
  for (const auto& t : A.entries)
    if (t.value != 0) return false;
  return true;
}

namespace {

struct PrimeField {
  using value = std::uint64_t;
  std::uint64_t p;

  value from(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<value>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }
  bool zero(value v) const { return v == 0; }
  bool unit(value v) const { return v != 0; }
  value mul(value a, value b) const { return static_cast<value>(static_cast<unsigned __int128>(a) * b % p); }
  value inverse(value a) const {
    value result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  /// x - f*y
  value sub_mul(value x, value f, value y) const {
    value fy = mul(f, y);
    return x >= fy ? x - fy : x + p - fy;
  }
  value factor(value a, value pivot) const { return mul(a, inverse(pivot)); }
};

struct Integers {
  using value = mpz_class;

  value from(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
  bool zero(const value& v) const { return sgn(v) == 0; }
  bool unit(const value& v) const { return v == 1 || v == -1; }
  value sub_mul(const value& x, const value& f, const value& y) const { return x - f * y; }
  /// a / pivot for a unit pivot
  value factor(const value& a, const value& pivot) const { return a * pivot; }
};

/// Sparse Gaussian elimination with unit pivots. Columns are taken in order
/// of fewest nonzeros; within a column the shortest row carrying a unit wins.
/// Whatever has no unit pivot left is handed back as a dense remainder.
template <class Ring>
class Eliminator {
 public:
  using T = typename Ring::value;

  Eliminator(const SparseIntMatrix& A, Ring ring) : ring_(ring), rows_(A.rows), cols_(A.cols) {
    for (const auto& t : A.entries) {
      T v = ring_.from(t.value);
      if (!ring_.zero(v)) rows_[t.row].emplace_back(t.col, v);
    }
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [c, v] : row) cols_[c].insert(r);
    }
    for (std::uint32_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) queue_.insert({cols_[c].size(), c});
  }

  /// Runs to completion; returns the number of pivots.
  std::size_t run() {
    while (true) {
      while (!queue_.empty()) {
        auto [count, c] = *queue_.begin();
        queue_.erase(queue_.begin());
        auto pivot = choose_pivot(c);
        if (!pivot) {
          deferred_.insert(c);
          continue;
        }
        eliminate(*pivot, c);
      }
      bool progress = false;
      for (auto it = deferred_.begin(); it != deferred_.end();) {
        if (!cols_[*it].empty() && choose_pivot(*it)) {
          queue_.insert({cols_[*it].size(), *it});
          it = deferred_.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
      if (!progress) break;
    }
    return pivots_;
  }

  /// Rows x columns of what is left (all entries non-units).
  std::vector<std::vector<T>> remainder() const {
    std::vector<std::uint32_t> live_cols;
    for (auto c : deferred_)
      if (!cols_[c].empty()) live_cols.push_back(c);
    std::map<std::uint32_t, std::size_t> col_pos;
    for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = i;
    std::vector<std::vector<T>> dense;
    for (const auto& row : rows_) {
      if (row.empty()) continue;
      std::vector<T> d(live_cols.size(), T(0));
      for (const auto& [c, v] : row) d[col_pos.at(c)] = v;
      dense.push_back(std::move(d));
    }
    return dense;
  }

 private:
  std::optional<std::uint32_t> choose_pivot(std::uint32_t c) const {
    std::optional<std::uint32_t> best;
    for (auto r : cols_[c]) {
      if (!ring_.unit(value_at(r, c))) continue;
      if (!best || rows_[r].size() < rows_[*best].size()) best = r;
    }
    return best;
  }

  const T& value_at(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
    return it->second;
  }

  void touch(std::uint32_t c, std::size_t old_count) {
    if (deferred_.count(c)) return;
    queue_.erase({old_count, c});
    if (!cols_[c].empty()) queue_.insert({cols_[c].size(), c});
  }

  void eliminate(std::uint32_t p, std::uint32_t c) {
    ++pivots_;
    const auto prow = rows_[p];
    const T pv = value_at(p, c);
    std::vector<std::uint32_t> targets;
    for (auto r : cols_[c])
      if (r != p) targets.push_back(r);
    std::map<std::uint32_t, std::size_t> old_counts;
    auto note = [&](std::uint32_t col) { old_counts.emplace(col, cols_[col].size()); };
    for (auto r : targets) {
      const T f = ring_.factor(value_at(r, c), pv);
      auto& row = rows_[r];
      std::vector<std::pair<std::uint32_t, T>> merged;
      merged.reserve(row.size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          merged.push_back(std::move(row[i++]));
        } else if (i == row.size() || prow[j].first < row[i].first) {
          const std::uint32_t col = prow[j].first;
          T v = ring_.sub_mul(T(0), f, prow[j].second);
          note(col);
          cols_[col].insert(r);
          merged.emplace_back(col, std::move(v));
          ++j;
        } else {
          const std::uint32_t col = prow[j].first;
          T v = ring_.sub_mul(row[i].second, f, prow[j].second);
          if (ring_.zero(v)) {
            note(col);
            cols_[col].erase(r);
          } else {
            merged.emplace_back(col, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
    }
    for (const auto& [col, v] : prow) {
      note(col);
      cols_[col].erase(p);
    }
    rows_[p].clear();
    for (const auto& [col, old] : old_counts)
      if (col != c) touch(col, old);
    queue_.erase({old_counts.count(c) ? old_counts[c] : cols_[c].size(), c});
    deferred_.erase(c);
  }

  Ring ring_;
  std::vector<std::vector<std::pair<std::uint32_t, T>>> rows_;
  std::vector<std::set<std::uint32_t>> cols_;
  std::set<std::pair<std::size_t, std::uint32_t>> queue_;
  std::set<std::uint32_t> deferred_;
  std::size_t pivots_ = 0;
};

/// Diagonalizes a dense integer matrix; returns the nonzero diagonal.
std::vector<mpz_class> dense_smith_diagonal(std::vector<std::vector<mpz_class>> M) {
  std::vector<mpz_class> diag;
  const std::size_t m = M.size();
  const std::size_t n = m ? M[0].size() : 0;
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero magnitude in the trailing block, ties by (row, col)
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(M[i][j]) != 0 && (pr == m || abs(M[i][j]) < abs(M[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(M[t], M[pr]);
    for (auto& row : M) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(M[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M[i][t].get_mpz_t(), M[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) M[i][j] -= q * M[t][j];
        if (sgn(M[i][t]) != 0) {
          clean = false;
          std::swap(M[t], M[i]);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(M[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), M[t][j].get_mpz_t(), M[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) M[i][j] -= q * M[i][t];
        if (sgn(M[t][j]) != 0) {
          clean = false;
          for (auto& row : M) std::swap(row[t], row[j]);
        }
      }
    }
    diag.push_back(abs(M[t][t]));
    ++t;
  }
  return diag;
}

void make_divisibility_chain(std::vector<mpz_class>& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
}

const std::vector<std::uint64_t>& large_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (unsigned long k : {1UL, 2UL, 3UL}) {
      mpz_class start = (mpz_class(1) << 61) - mpz_class(k * 1000003UL);
      mpz_class p;
      mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
      out.push_back(p.get_ui());
    }
    return out;
  }();
  return primes;
}

}  // namespace

std::size_t rank_mod_p(const SparseIntMatrix& A, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime out of range");
  Eliminator<PrimeField> e(A, PrimeField{p});
  return e.run();
}

std::size_t rank_rational(const SparseIntMatrix& A) {
  std::size_t best = 0;
  for (auto p : large_primes()) best = std::max(best, rank_mod_p(A, p));
  return best;
}

std::size_t rank_bareiss(const SparseIntMatrix& A) {
  std::vector<std::vector<mpz_class>> M(A.rows, std::vector<mpz_class>(A.cols, 0));
  for (const auto& t : A.entries) M[t.row][t.col] += static_cast<long>(t.value);
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < A.cols && rank < A.rows; ++c) {
    std::size_t pr = rank;
    while (pr < A.rows && sgn(M[pr][c]) == 0) ++pr;
    if (pr == A.rows) continue;
    std::swap(M[rank], M[pr]);
    for (std::size_t i = rank + 1; i < A.rows; ++i) {
      for (std::size_t j = c + 1; j < A.cols; ++j) {
        M[i][j] = M[rank][c] * M[i][j] - M[i][c] * M[rank][j];
        mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      M[i][c] = 0;
    }
    prev = M[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<mpz_class> smith_invariant_factors(const SparseIntMatrix& A) {
  Eliminator<Integers> e(A, Integers{});
  const std::size_t ones = e.run();
  std::vector<mpz_class> rest = dense_smith_diagonal(e.remainder());
  make_divisibility_chain(rest);
  std::vector<mpz_class> out(ones, mpz_class(1));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace l2lab
