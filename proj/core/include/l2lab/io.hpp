#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "l2lab/complex.hpp"
#include "l2lab/davis.hpp"
#include "l2lab/group.hpp"
#include "l2lab/homology.hpp"
#include "l2lab/script.hpp"

namespace l2lab {

using json = nlohmann::json;

/// {"vertices": [...], "maximal_simplices": [[...], ...]}
json complex_to_json(const SimplicialComplex& L);
/// Accepts the form above, or {"catalog": name, "param": n}. Listed vertices
/// outside every simplex become isolated vertices; simplices may only use
/// listed vertices. Throws MalformedInput.
SimplicialComplex complex_from_json(const json& j);

json fvector_to_json(const FVector& f);

json script_to_json(const SubdivisionScript& s);
SubdivisionScript script_from_json(const json& j);
json script_report_to_json(const ScriptReport& r);

/// {"permutations": [[...], ...]} with one permutation per vertex in sorted
/// order, or {"table": [[...]], "generators": [...]}.
FiniteQuotient quotient_from_json(const SimplicialComplex& L, const json& j);

json cube_complex_to_json(const CubeComplex& X);
CubeComplex cube_complex_from_json(const json& j);

json homology_to_json(const HomologySummary& h);
HomologySummary homology_from_json(const json& j);

json growth_to_json(const GrowthSeries& g);

/// Reads JSON from a file, or from stdin when path is "-".
json read_json(const std::string& path);

}  // namespace l2lab
