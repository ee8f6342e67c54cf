#pragma once

#include "l2lab/complex.hpp"

namespace l2lab {

/// Sub_e(L): the open star of e is replaced by the cone from the midpoint of e
/// over the suspension of Lk e, suspended at the endpoints of e.
SimplicialComplex sub_edge(const SimplicialComplex& L, const Simplex& e);

/// Lk σ in Sub_e(L), computed from L through the four-case description.
/// The result is label-for-label equal to link(sub_edge(L, e), σ).
SimplicialComplex link_in_subdivision(const SimplicialComplex& L, const Simplex& e, const Simplex& sigma);

/// b(L, K): simplices of L outside K are barycentrically subdivided.
/// Vertices of K keep their labels; the barycenter of σ is barycenter_label(σ).
SimplicialComplex relative_barycentric(const SimplicialComplex& L, const SimplicialComplex& K);

/// Link of a vertex of b(L, K), assembled from links in L and K. Labelled so
/// that it equals link(relative_barycentric(L, K), {v}) exactly.
SimplicialComplex link_in_relative_barycentric(const SimplicialComplex& L, const SimplicialComplex& K,
                                               const VertexId& v);

/// ∂σ as a complex (empty complex for a vertex).
SimplicialComplex simplex_boundary(const Simplex& sigma);

/// The full simplex on the given vertices.
SimplicialComplex full_simplex(const Simplex& sigma);

}  // namespace l2lab
