#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2lab/complex.hpp"

namespace l2lab {

/// Named, canonically labelled complexes.
///
///   point, S0, empty, hexagon, cube-1-skeleton, K33, petersen  (no parameter)
///   simplex n, boundary-simplex n, octahedron n, polygon m,
///   three-join n, bary-boundary-simplex n                       (parameter required)
///
/// Throws UnknownCatalogName for other names or a missing/invalid parameter.
SimplicialComplex special_complex(const std::string& name, int param = -1);

/// Catalog names in a stable order.
std::vector<std::string> catalog_names();

/// True iff the name takes a numeric parameter.
bool catalog_takes_parameter(const std::string& name);

/// Dimension d when the catalog entry is a triangulated d-sphere, else nullopt.
std::optional<int> catalog_sphere_dimension(const std::string& name, int param = -1);

}  // namespace l2lab
