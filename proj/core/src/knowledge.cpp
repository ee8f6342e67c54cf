#include "l2lab/knowledge.hpp"

namespace l2lab {

std::string status_name(Status s) {
  switch (s) {
    case Status::Zero: return "zero";
    case Status::Exact: return "exact";
    case Status::Upper: return "upper";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

DegreeFact DegreeFact::exact(const mpq_class& q) {
  if (q == 0) return zero();
  return {Status::Exact, q};
}

DegreeFact DegreeFact::upper(const mpq_class& q) {
  if (q == 0) return zero();
  return {Status::Upper, q};
}

std::string to_string(const DegreeFact& f) {
  switch (f.status) {
    case Status::Zero: return "0";
    case Status::Exact: return f.value.get_str();
    case Status::Upper: return "<=" + f.value.get_str();
    case Status::Unknown: return "?";
  }
  return "?";
}

DegreeFact BettiKnowledge::at(int i) const {
  if (i < 0 || i >= static_cast<int>(degrees.size())) return DegreeFact::zero();
  return degrees[static_cast<std::size_t>(i)];
}

bool BettiKnowledge::all_zero() const {
  for (const auto& d : degrees)
    if (!d.is_zero()) return false;
  return true;
}

bool BettiKnowledge::fully_determined() const { return undetermined().empty(); }

std::vector<int> BettiKnowledge::undetermined() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (!degrees[i].determined()) out.push_back(static_cast<int>(i));
  return out;
}

BettiKnowledge unknown_knowledge(int dim, int characteristic) {
  BettiKnowledge k;
  k.characteristic = characteristic;
  k.degrees.assign(static_cast<std::size_t>(dim + 2), DegreeFact::unknown());
  return k;
}

std::optional<DegreeFact> meet(const DegreeFact& a, const DegreeFact& b) {
  if (!a.bounded()) return b;
  if (!b.bounded()) return a;
  if (a.determined() && b.determined()) {
    if (a.value != b.value) return std::nullopt;
    return a;
  }
  if (a.determined()) {
    if (a.value > b.value) return std::nullopt;
    return a;
  }
  if (b.determined()) {
    if (b.value > a.value) return std::nullopt;
    return b;
  }
  return a.value <= b.value ? a : b;
}

bool entails(const DegreeFact& derived, const DegreeFact& claimed) {
  switch (claimed.status) {
    case Status::Unknown: return true;
    case Status::Zero: return derived.is_zero();
    case Status::Exact: return derived.determined() && derived.value == claimed.value;
    case Status::Upper: return derived.bounded() && derived.value <= claimed.value;
  }
  return false;
}

DegreeFact scale(const DegreeFact& f, const mpq_class& c) {
  switch (f.status) {
    case Status::Zero: return f;
    case Status::Exact: return DegreeFact::exact(f.value * c);
    case Status::Upper: return DegreeFact::upper(f.value * c);
    case Status::Unknown: return f;
  }
  return f;
}

DegreeFact add(const DegreeFact& a, const DegreeFact& b) {
  if (!a.bounded() || !b.bounded()) return DegreeFact::unknown();
  if (a.determined() && b.determined()) return DegreeFact::exact(a.value + b.value);
  return DegreeFact::upper(a.value + b.value);
}

DegreeFact multiply(const DegreeFact& a, const DegreeFact& b) {
  if (a.is_zero() || b.is_zero()) return DegreeFact::zero();
  if (!a.bounded() || !b.bounded()) return DegreeFact::unknown();
  if (a.determined() && b.determined()) return DegreeFact::exact(a.value * b.value);
  return DegreeFact::upper(a.value * b.value);
}

DegreeFact as_upper_bound(const DegreeFact& f) {
  if (f.status == Status::Exact) return DegreeFact::upper(f.value);
  return f;
}

BettiKnowledge convolve(const BettiKnowledge& a, const BettiKnowledge& b, int join_dim) {
  BettiKnowledge out = unknown_knowledge(join_dim, a.characteristic);
  for (int n = 0; n < static_cast<int>(out.degrees.size()); ++n) {
    DegreeFact sum = DegreeFact::zero();
    for (int i = 0; i <= n; ++i) sum = add(sum, multiply(a.at(i), b.at(n - i)));
    out.degrees[static_cast<std::size_t>(n)] = sum;
  }
  return out;
}

std::optional<mpq_class> alternating_sum(const BettiKnowledge& k) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < k.degrees.size(); ++i) {
    if (!k.degrees[i].determined()) return std::nullopt;
    if (i % 2 == 0) s += k.degrees[i].value; else s -= k.degrees[i].value;
  }
  return s;
}

}  // namespace l2lab
