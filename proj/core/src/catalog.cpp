#include "l2lab/catalog.hpp"

#include "l2lab/error.hpp"
#include "l2lab/subdivision.hpp"

namespace l2lab {

namespace {

Simplex range_simplex(int n) {
  std::vector<VertexId> vs;
  for (int i = 0; i <= n; ++i) vs.push_back(std::to_string(i));
  return make_simplex(std::move(vs));
}

SimplicialComplex graph(const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> maximal;
  for (const auto& [a, b] : edges) maximal.push_back({a, b});
  return SimplicialComplex::from_maximal(maximal);
}

SimplicialComplex polygon(int m) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(std::to_string(i), std::to_string((i + 1) % m));
  return graph(edges);
}

SimplicialComplex octahedron(int n) {
  SimplicialComplex out;
  for (int i = 1; i <= n; ++i) {
    auto pair = SimplicialComplex::from_maximal({{"p" + std::to_string(i)}, {"m" + std::to_string(i)}});
    out = (i == 1) ? pair : join(out, pair);
  }
  return out;
}

SimplicialComplex three_join(int n) {
  SimplicialComplex out;
  for (int i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    auto triple = SimplicialComplex::from_maximal({{"a" + k}, {"b" + k}, {"c" + k}});
    out = (i == 1) ? triple : join(out, triple);
  }
  return out;
}

SimplicialComplex cube_skeleton() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto bits = [](int x) {
    std::string s;
    for (int b = 2; b >= 0; --b) s += ((x >> b) & 1) ? '1' : '0';
    return s;
  };
  for (int x = 0; x < 8; ++x)
    for (int b = 0; b < 3; ++b)
      if (!(x & (1 << b))) edges.emplace_back(bits(x), bits(x | (1 << b)));
  return graph(edges);
}

SimplicialComplex petersen() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(std::to_string(i), std::to_string((i + 1) % 5));
    edges.emplace_back(std::to_string(i), std::to_string(i + 5));
    edges.emplace_back(std::to_string(5 + i), std::to_string(5 + (i + 2) % 5));
  }
  return graph(edges);
}

[[noreturn]] void unknown(const std::string& name, int param) {
  fail(ErrorCode::UnknownCatalogName, "no catalog entry '" + name + "' with parameter " + std::to_string(param));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"point",    "S0",          "empty",        "hexagon",        "cube-1-skeleton",      "K33",
          "petersen", "simplex",     "boundary-simplex", "octahedron", "polygon", "three-join",
          "bary-boundary-simplex"};
}

bool catalog_takes_parameter(const std::string& name) {
  return name == "simplex" || name == "boundary-simplex" || name == "octahedron" || name == "polygon" ||
         name == "three-join" || name == "bary-boundary-simplex";
}

SimplicialComplex special_complex(const std::string& name, int param) {
  if (name == "point") return SimplicialComplex::from_maximal({{"0"}});
  if (name == "S0") return SimplicialComplex::from_maximal({{"0"}, {"1"}});
  if (name == "empty") return SimplicialComplex{};
  if (name == "hexagon") return polygon(6);
  if (name == "cube-1-skeleton") return cube_skeleton();
  if (name == "K33")
    return graph({{"a0", "b0"}, {"a0", "b1"}, {"a0", "b2"}, {"a1", "b0"}, {"a1", "b1"},
                  {"a1", "b2"}, {"a2", "b0"}, {"a2", "b1"}, {"a2", "b2"}});
  if (name == "petersen") return petersen();
  if (!catalog_takes_parameter(name)) unknown(name, param);
  if (name == "simplex" && param >= 0) return full_simplex(range_simplex(param));
  if (name == "boundary-simplex" && param >= 1) return simplex_boundary(range_simplex(param));
  if (name == "octahedron" && param >= 1) return octahedron(param);
  if (name == "polygon" && param >= 3) return polygon(param);
  if (name == "three-join" && param >= 1) return three_join(param);
  if (name == "bary-boundary-simplex" && param >= 1)
    return relative_barycentric(simplex_boundary(range_simplex(param)), SimplicialComplex{});
  unknown(name, param);
}

std::optional<int> catalog_sphere_dimension(const std::string& name, int param) {
  if (name == "S0") return 0;
  if (name == "hexagon") return 1;
  if (name == "polygon" && param >= 3) return 1;
  if ((name == "boundary-simplex" || name == "octahedron" || name == "bary-boundary-simplex") && param >= 1)
    return param - 1;
  return std::nullopt;
}

}  // namespace l2lab
