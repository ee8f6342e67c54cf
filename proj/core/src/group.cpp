#include "l2lab/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "l2lab/error.hpp"

namespace l2lab {

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                           std::size_t max_order) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) fail(ErrorCode::MalformedInput, "permutations of different degrees");
    std::vector<char> seen(degree, 0);
    for (auto x : g) {
      if (x >= degree || seen[x]) fail(ErrorCode::MalformedInput, "generator is not a permutation");
      seen[x] = 1;
    }
  }
  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::map<Perm, Element> index{{id, 0}};
  std::vector<Perm> elems{id};
  FiniteGroup G;
  G.right_mult_.assign(generators.size(), {});
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
      // g * s acts as x -> s(g(x)) in left-to-right composition
      Perm prod(degree);
      for (std::size_t x = 0; x < degree; ++x) prod[x] = generators[i][elems[head][x]];
      auto [it, fresh] = index.emplace(prod, static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() >= max_order)
          fail(ErrorCode::SizeLimitExceeded, "group order exceeds " + std::to_string(max_order));
        elems.push_back(prod);
      }
      if (G.right_mult_[i].size() <= head) G.right_mult_[i].resize(head + 1);
      G.right_mult_[i][head] = it->second;
    }
  }
  G.order_ = elems.size();
  return G;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                    const std::vector<Element>& generators) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::MalformedInput, "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorCode::MalformedInput, "multiplication table is not square");
    for (auto x : row)
      if (x >= n) fail(ErrorCode::MalformedInput, "table entry out of range");
  }
  FiniteGroup G;
  G.order_ = n;
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      G.identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) fail(ErrorCode::MalformedInput, "multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(ErrorCode::MalformedInput, "multiplication table is not associative");
  for (auto g : generators) {
    if (g >= n) fail(ErrorCode::MalformedInput, "generator index out of range");
    std::vector<Element> col(n);
    for (std::size_t a = 0; a < n; ++a) col[a] = table[a][g];
    G.right_mult_.push_back(std::move(col));
  }
  return G;
}

FiniteGroup FiniteGroup::elementary_abelian(std::size_t rank) {
  if (rank > 26) fail(ErrorCode::SizeLimitExceeded, "elementary abelian group of rank > 26");
  FiniteGroup G;
  G.order_ = std::size_t{1} << rank;
  G.right_mult_.assign(rank, std::vector<Element>(G.order_));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t g = 0; g < G.order_; ++g) G.right_mult_[i][g] = static_cast<Element>(g ^ (std::size_t{1} << i));
  return G;
}

FiniteQuotient::FiniteQuotient(SimplicialComplex L, FiniteGroup G) : L_(std::move(L)), G_(std::move(G)) {
  const auto& vs = L_.vertices();
  if (G_.num_generators() != vs.size())
    fail(ErrorCode::InvalidQuotient, "expected one generator image per vertex of L");
  const auto e = G_.identity();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (G_.times_generator(G_.generator(i), i) != e)
      fail(ErrorCode::InvalidQuotient, "image of '" + vs[i] + "' does not have order dividing 2");
  for (const auto& edge : L_.faces_of_dimension(1)) {
    auto s = generator_of(edge[0]);
    auto t = generator_of(edge[1]);
    if (G_.times_generator(G_.generator(s), t) != G_.times_generator(G_.generator(t), s))
      fail(ErrorCode::InvalidQuotient, "images of " + to_string(edge) + " do not commute");
  }
  for (const auto& sigma : L_.faces()) {
    std::set<FiniteGroup::Element> products;
    const std::size_t k = sigma.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      auto g = e;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (1u << j)) g = G_.times_generator(g, generator_of(sigma[j]));
      products.insert(g);
    }
    if (products.size() != (std::size_t{1} << k))
      fail(ErrorCode::InvalidQuotient, "images of " + to_string(sigma) + " do not generate a group of order 2^" +
                                           std::to_string(k));
  }
}

std::size_t FiniteQuotient::generator_of(const VertexId& v) const {
  const auto& vs = L_.vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) fail(ErrorCode::VertexNotPresent, "vertex '" + v + "' not in L");
  return static_cast<std::size_t>(it - vs.begin());
}

FiniteQuotient canonical_quotient(const SimplicialComplex& L) {
  return FiniteQuotient(L, FiniteGroup::elementary_abelian(L.num_vertices()));
}

}  // namespace l2lab
