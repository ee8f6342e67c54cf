#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "l2lab/certificate.hpp"
#include "l2lab/isomorphism.hpp"

namespace l2lab {

/// Exactly one of certificate (b_2 = 0) and k33_witness is set.
struct TrivalentResult {
  std::optional<Certificate> certificate;
  /// Vertex map from the input onto catalog "K33".
  std::optional<VertexMap> k33_witness;
  /// How the non-adjacent pair u, v was found, when that case was reached:
  /// "suspension", "max-distance" or "search".
  std::string pair_choice;
};

/// b_2(W_G) = 0 for a connected flag graph of degree <= 3 other than K_{3,3}.
/// Peels vertices of degree <= 2, splits along separating edges and
/// non-adjacent pairs, and otherwise removes edges from S(G - u - v) one at a
/// time with links of at most two points. Throws NotTrivalentEligible.
TrivalentResult trivalent_decision(const SimplicialComplex& G, int characteristic = 0);

/// Node proving b_2 = 0 for any triangle-free graph of degree <= 3 whose
/// components avoid K_{3,3}; nullopt (and the witness, if asked) otherwise.
std::optional<std::size_t> graph_b2_node(CertificateBuilder& b, const SimplicialComplex& G,
                                         std::optional<VertexMap>* k33 = nullptr, std::string* pair_choice = nullptr);

struct MinimallyBranchingResult {
  int n = 0;  // the degree decided: dim L + 1
  std::optional<Certificate> certificate;
  /// Vertex map from the input onto catalog "three-join" n.
  std::optional<VertexMap> three_join_witness;
  /// Set when neither outcome could be produced.
  std::string note;
};

/// b_n(W_L) = 0 for an (n-1)-dimensional flag complex whose (n-2)-simplices
/// lie in at most three top simplices and whose k-simplex links are connected
/// for -1 <= k < n-2, unless L = 3^{*n}. Throws HypothesisViolated.
MinimallyBranchingResult minimally_branching_decision(const SimplicialComplex& L, int characteristic = 0);

}  // namespace l2lab
