#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "l2lab/complex.hpp"

namespace l2lab {

/// A finite group presented by a generating list, stored as right
/// multiplication tables: element indices 0..order-1, generator images fixed.
class FiniteGroup {
 public:
  using Element = std::uint32_t;

  /// Closure of permutation generators by breadth-first search.
  /// Throws SizeLimitExceeded when the group grows past max_order.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                       std::size_t max_order = 1'000'000);

  /// table[a][b] = a*b. generators are element indices.
  static FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                const std::vector<Element>& generators);

  /// (Z/2)^rank with generator i the i-th basis vector; elements are bitmasks.
  static FiniteGroup elementary_abelian(std::size_t rank);

  std::size_t order() const { return order_; }
  std::size_t num_generators() const { return right_mult_.size(); }
  Element identity() const { return identity_; }
  /// g * (generator i)
  Element times_generator(Element g, std::size_t i) const { return right_mult_[i][g]; }
  Element generator(std::size_t i) const { return right_mult_[i][identity_]; }

 private:
  std::size_t order_ = 1;
  Element identity_ = 0;
  std::vector<std::vector<Element>> right_mult_;
};

/// Homomorphism W_L -> G sending the i-th vertex of L (in sorted order) to
/// generator i of G. Construction validates it.
class FiniteQuotient {
 public:
  /// Throws InvalidQuotient naming the failed condition: an image of order
  /// not dividing 2, adjacent images that do not commute, or a simplex whose
  /// images generate a subgroup of order other than 2^|σ|.
  FiniteQuotient(SimplicialComplex L, FiniteGroup G);

  const SimplicialComplex& nerve() const { return L_; }
  const FiniteGroup& group() const { return G_; }
  std::size_t generator_of(const VertexId& v) const;

 private:
  SimplicialComplex L_;
  FiniteGroup G_;
};

/// W_L -> (Z/2)^{|L^0|}, s -> e_s.
FiniteQuotient canonical_quotient(const SimplicialComplex& L);

}  // namespace l2lab
