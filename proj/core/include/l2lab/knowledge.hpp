#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace l2lab {

enum class Status { Zero, Exact, Upper, Unknown };

std::string status_name(Status s);

/// What is known about one Betti number. `value` is the exact value for
/// Exact and the bound for Upper. Exact(0) and Upper(0) normalize to Zero.
struct DegreeFact {
  Status status = Status::Unknown;
  mpq_class value = 0;

  static DegreeFact zero() { return {Status::Zero, 0}; }
  static DegreeFact exact(const mpq_class& q);
  static DegreeFact upper(const mpq_class& q);
  static DegreeFact unknown() { return {}; }

  bool is_zero() const { return status == Status::Zero; }
  /// Zero or Exact.
  bool determined() const { return status == Status::Zero || status == Status::Exact; }
  bool bounded() const { return status != Status::Unknown; }
  bool operator==(const DegreeFact& o) const { return status == o.status && value == o.value; }
};

std::string to_string(const DegreeFact& f);

/// Per-degree knowledge of b_i(W_L; F) for i = 0 .. dim L + 1. Degrees past
/// the stored range, and degree -1, read as Zero.
struct BettiKnowledge {
  int characteristic = 0;
  std::vector<DegreeFact> degrees;

  DegreeFact at(int i) const;
  bool all_zero() const;
  bool fully_determined() const;
  /// Degrees that are neither Zero nor Exact.
  std::vector<int> undetermined() const;
  bool operator==(const BettiKnowledge&) const = default;
};

/// All Unknown, sized for a complex of dimension `dim`.
BettiKnowledge unknown_knowledge(int dim, int characteristic);

/// The sharper of two facts about the same number; nullopt if they conflict.
std::optional<DegreeFact> meet(const DegreeFact& a, const DegreeFact& b);

/// True when `derived` implies `claimed`.
bool entails(const DegreeFact& derived, const DegreeFact& claimed);

DegreeFact scale(const DegreeFact& f, const mpq_class& c);
DegreeFact add(const DegreeFact& a, const DegreeFact& b);
DegreeFact multiply(const DegreeFact& a, const DegreeFact& b);
/// Exact(q) becomes Upper(q); the rest pass through.
DegreeFact as_upper_bound(const DegreeFact& f);

/// Künneth convolution for a join, sized for the join's dimension.
BettiKnowledge convolve(const BettiKnowledge& a, const BettiKnowledge& b, int join_dim);

/// Σ (-1)^i b_i, defined once every degree is determined.
std::optional<mpq_class> alternating_sum(const BettiKnowledge& k);

}  // namespace l2lab
