#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "l2lab/complex.hpp"

namespace l2lab {

using VertexMap = std::map<VertexId, VertexId>;

/// Simplicial isomorphism L1 -> L2 by backtracking, or nullopt.
/// Deterministic for given inputs. Throws SizeLimitExceeded above max_vertices.
std::optional<VertexMap> find_isomorphism(const SimplicialComplex& L1, const SimplicialComplex& L2,
                                          std::size_t max_vertices = 64);

bool is_isomorphic(const SimplicialComplex& L1, const SimplicialComplex& L2, std::size_t max_vertices = 64);

/// Checks that phi is a bijection on vertices carrying faces onto faces.
bool is_isomorphism(const SimplicialComplex& L1, const SimplicialComplex& L2, const VertexMap& phi);

/// Image of L under a vertex relabelling (unmapped vertices keep their names).
SimplicialComplex relabel(const SimplicialComplex& L, const VertexMap& phi);

}  // namespace l2lab
