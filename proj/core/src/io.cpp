#include "l2lab/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "l2lab/catalog.hpp"
#include "l2lab/error.hpp"

namespace l2lab {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::MalformedInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedInput, std::string("bad field '") + key + "': " + e.what());
  }
}

json matrix_to_json(const SparseIntMatrix& A) {
  json entries = json::array();
  for (const auto& t : A.entries) entries.push_back({t.row, t.col, t.value});
  return {{"rows", A.rows}, {"cols", A.cols}, {"entries", std::move(entries)}};
}

SparseIntMatrix matrix_from_json(const json& j) {
  SparseIntMatrix A;
  A.rows = field<std::size_t>(j, "rows");
  A.cols = field<std::size_t>(j, "cols");
  for (const auto& e : field<json>(j, "entries")) {
    if (!e.is_array() || e.size() != 3) fail(ErrorCode::MalformedInput, "matrix entry must be [row, col, value]");
    const auto r = e[0].get<std::uint32_t>();
    const auto c = e[1].get<std::uint32_t>();
    if (r >= A.rows || c >= A.cols) fail(ErrorCode::MalformedInput, "matrix entry out of range");
    A.add(r, c, e[2].get<std::int64_t>());
  }
  A.normalize();
  return A;
}

json mpz_list(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

json complex_to_json(const SimplicialComplex& L) {
  json maximal = json::array();
  for (const auto& s : L.maximal_simplices()) maximal.push_back(s);
  return {{"vertices", L.vertices()}, {"maximal_simplices", std::move(maximal)}};
}

SimplicialComplex complex_from_json(const json& j) {
  if (j.is_object() && j.contains("catalog")) {
    const auto name = field<std::string>(j, "catalog");
    const int param = j.contains("param") ? field<int>(j, "param") : -1;
    return special_complex(name, param);
  }
  const auto maximal = field<std::vector<std::vector<std::string>>>(j, "maximal_simplices");
  std::vector<std::string> extra;
  if (j.contains("vertices")) {
    const auto listed = field<std::vector<std::string>>(j, "vertices");
    std::set<std::string> known(listed.begin(), listed.end());
    if (known.size() != listed.size()) fail(ErrorCode::MalformedInput, "duplicate entry in vertex list");
    std::set<std::string> used;
    for (const auto& s : maximal)
      for (const auto& v : s) {
        if (!known.count(v)) fail(ErrorCode::MalformedInput, "simplex uses unlisted vertex '" + v + "'");
        used.insert(v);
      }
    for (const auto& v : listed)
      if (!used.count(v)) extra.push_back(v);
  }
  return SimplicialComplex::from_maximal(maximal, extra);
}

json fvector_to_json(const FVector& f) {
  std::vector<std::size_t> tail(f.counts.begin() + 1, f.counts.end());
  return tail;
}

json script_to_json(const SubdivisionScript& s) {
  json steps = json::array();
  for (const auto& st : s.steps) steps.push_back({{"edge", {st.u, st.v}}});
  json out = {{"source", complex_to_json(s.source)}, {"steps", std::move(steps)}};
  if (s.claimed_target) out["claimed_target"] = complex_to_json(*s.claimed_target);
  if (s.relative)
    out["relative"] = {{"ambient", complex_to_json(s.relative->ambient)},
                       {"sub", complex_to_json(s.relative->sub)}};
  return out;
}

SubdivisionScript script_from_json(const json& j) {
  SubdivisionScript s;
  s.source = complex_from_json(field<json>(j, "source"));
  for (const auto& item : field<json>(j, "steps")) {
    const json& st = item.is_object() && item.contains("edge") ? item["edge"] : item;
    if (!st.is_array() || st.size() != 2 || !st[0].is_string() || !st[1].is_string())
      fail(ErrorCode::MalformedInput, "step must be {\"edge\": [u, v]} or [u, v]");
    s.steps.push_back({st[0].get<std::string>(), st[1].get<std::string>()});
  }
  if (j.contains("claimed_target") && !j["claimed_target"].is_null()) s.claimed_target = complex_from_json(j["claimed_target"]);
  if (j.contains("relative")) {
    const auto& r = j["relative"];
    s.relative = RelativeMeta{complex_from_json(field<json>(r, "ambient")), complex_from_json(field<json>(r, "sub"))};
  }
  return s;
}

json script_report_to_json(const ScriptReport& r) {
  json out = {{"passed", r.passed()}, {"replay_ok", r.replay_ok}, {"steps_applied", r.steps_applied},
              {"messages", r.messages}};
  if (r.failed_step) out["failed_step"] = *r.failed_step;
  if (r.target_ok) out["target_ok"] = *r.target_ok;
  if (r.condition_i) out["condition_i"] = *r.condition_i;
  if (r.condition_ii) out["condition_ii"] = *r.condition_ii;
  return out;
}

FiniteQuotient quotient_from_json(const SimplicialComplex& L, const json& j) {
  if (j.contains("permutations"))
    return FiniteQuotient(L, FiniteGroup::from_permutations(
                                 field<std::vector<std::vector<std::uint32_t>>>(j, "permutations")));
  if (j.contains("table"))
    return FiniteQuotient(L, FiniteGroup::from_table(field<std::vector<std::vector<std::uint32_t>>>(j, "table"),
                                                     field<std::vector<std::uint32_t>>(j, "generators")));
  fail(ErrorCode::MalformedInput, "group needs 'permutations' or 'table'");
}

json cube_complex_to_json(const CubeComplex& X) {
  json boundary = json::array();
  for (std::size_t k = 1; k < X.boundary.size(); ++k) boundary.push_back(matrix_to_json(X.boundary[k]));
  json out = {{"description", X.description}, {"index", X.index}, {"counts", X.counts},
              {"boundary", std::move(boundary)}};
  if (X.cells) {
    json cells = json::array();
    for (const auto& dim : *X.cells) {
      json row = json::array();
      for (const auto& c : dim)
        row.push_back({{"rep", c.coset_rep}, {"mu", c.cell.mu}, {"free", c.cell.free}, {"sheet", c.sheet}});
      cells.push_back(std::move(row));
    }
    out["cells"] = std::move(cells);
  }
  return out;
}

CubeComplex cube_complex_from_json(const json& j) {
  CubeComplex X;
  X.description = j.value("description", std::string{});
  X.index = j.contains("index") ? field<std::uint64_t>(j, "index") : 1;
  if (X.index == 0) fail(ErrorCode::MalformedInput, "index must be positive");
  X.counts = field<std::vector<std::size_t>>(j, "counts");
  const auto b = field<json>(j, "boundary");
  if (X.counts.empty() || b.size() + 1 != X.counts.size())
    fail(ErrorCode::MalformedInput, "need one boundary matrix per positive dimension");
  X.boundary.resize(X.counts.size());
  X.boundary[0].cols = X.counts[0];
  for (std::size_t k = 1; k < X.counts.size(); ++k) {
    X.boundary[k] = matrix_from_json(b[k - 1]);
    if (X.boundary[k].rows != X.counts[k - 1] || X.boundary[k].cols != X.counts[k])
      fail(ErrorCode::MalformedInput, "boundary matrix " + std::to_string(k) + " has the wrong shape");
  }
  try {
    X.check_boundary_squares_zero();
  } catch (const std::logic_error& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
  return X;
}

json homology_to_json(const HomologySummary& h) {
  json fp = json::object();
  for (const auto& [p, b] : h.betti_Fp) fp[std::to_string(p)] = b;
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(mpz_list(t));
  return {{"betti_Q", h.betti_Q}, {"betti_Fp", std::move(fp)}, {"torsion", std::move(torsion)},
          {"logtor", h.logtor}, {"euler", h.euler()}};
}

HomologySummary homology_from_json(const json& j) {
  HomologySummary h;
  h.betti_Q = field<std::vector<std::size_t>>(j, "betti_Q");
  const json fp = field<json>(j, "betti_Fp");
  for (const auto& [p, b] : fp.items())
    h.betti_Fp[std::stoull(p)] = b.get<std::vector<std::size_t>>();
  for (const auto& row : field<json>(j, "torsion")) {
    std::vector<mpz_class> divs;
    for (const auto& d : row) divs.emplace_back(d.get<std::string>());
    h.torsion.push_back(std::move(divs));
  }
  h.logtor = j.contains("logtor") ? field<std::vector<double>>(j, "logtor") : std::vector<double>(h.torsion.size());
  return h;
}

json growth_to_json(const GrowthSeries& g) {
  json rows = json::array();
  for (const auto& r : g.rows) {
    json bq = json::array(), bp = json::array();
    for (const auto& q : r.betti_Q) bq.push_back(q.get_str());
    for (const auto& q : r.betti_Fp) bp.push_back(q.get_str());
    rows.push_back({{"exponents", r.exponents}, {"degree", r.degree}, {"index", r.index},
                    {"betti_Q_normalized", std::move(bq)}, {"betti_Fp_normalized", std::move(bp)},
                    {"logtor_normalized", r.logtor}, {"homology", homology_to_json(r.summary)}});
  }
  return {{"p", g.p}, {"rows", std::move(rows)}};
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::MalformedInput, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::MalformedInput, "invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace l2lab
