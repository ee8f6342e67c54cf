#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "l2lab/catalog.hpp"
#include "l2lab/certificate.hpp"
#include "l2lab/decisions.hpp"
#include "l2lab/error.hpp"
#include "l2lab/homology.hpp"
#include "l2lab/io.hpp"
#include "l2lab/script.hpp"
#include "l2lab/subdivision.hpp"
#include "l2lab/torsion.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace l2lab;

namespace {

constexpr int kInputError = 2;
constexpr int kVerificationFailure = 3;
constexpr int kResourceBound = 4;

/// Raised for a failed check whose report has already been printed.
struct VerificationFailed {
  std::string message;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::RankTooLarge:
      return kResourceBound;
    case ErrorCode::TargetMismatch:
    case ErrorCode::StepEdgeMissing:
    case ErrorCode::MonotonicityViolated:
      return kVerificationFailure;
    default:
      return kInputError;
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

SimplicialComplex load_complex(const std::string& path) { return complex_from_json(read_json(path)); }

Simplex parse_simplex(const std::string& s) { return make_simplex(split(s, ',')); }

std::string fvector_table(const SimplicialComplex& L) {
  std::ostringstream out;
  const auto f = f_vector(L);
  out << "dim  count\n";
  for (int k = 0; k <= L.dimension(); ++k) out << k << "    " << f.f(k) << '\n';
  return out.str();
}

std::string join_str(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

template <class T>
std::vector<std::string> strs(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    std::ostringstream s;
    s << x;
    out.push_back(s.str());
  }
  return out;
}

json info_json(const SimplicialComplex& L) {
  json j = {{"vertices", L.num_vertices()},
            {"dimension", L.dimension()},
            {"f_vector", fvector_to_json(f_vector(L))},
            {"flag", L.is_flag()},
            {"euler", euler_characteristic(L)},
            {"euler_l2", euler_l2(L).get_str()},
            {"components", connected_components(L).size()}};
  if (auto tag = catalog_sphere_tag(L)) j["sphere"] = {{"dimension", tag->dimension}, {"provenance", tag->provenance}};
  return j;
}

/// A cube complex JSON as is, or P_L (coarse) for a complex JSON.
CubeComplex load_space(const std::string& path) {
  const auto j = read_json(path);
  if (j.contains("boundary")) return cube_complex_from_json(j);
  return davis_pl(complex_from_json(j));
}

json chamber_json(const SimplicialComplex& L) {
  const auto C = chamber(L);
  json cells = json::array();
  for (const auto& layer : C.cells)
    for (const auto& c : layer) cells.push_back({{"mu", c.mu}, {"free", c.free}});
  return {{"counts", C.counts()}, {"euler", C.euler()}, {"cells", std::move(cells)}};
}

std::set<int> parse_goal(const std::string& goal) {
  std::set<int> out;
  if (goal == "all") return out;
  for (const auto& g : split(goal, ',')) out.insert(std::stoi(g));
  return out;
}

json certificate_summary(const Certificate& c) {
  return {{"conclusion", knowledge_to_json(c.conclusion())}, {"nodes", c.nodes.size()}, {"certificate", certificate_to_json(c)}};
}

json witness_json(const VertexMap& m) {
  json j = json::object();
  for (const auto& [a, b] : m) j[a] = b;
  return j;
}

/// Accepts a bare certificate or the object certify prints.
const json& certificate_part(const json& j) { return j.contains("certificate") ? j["certificate"] : j; }

int verify_file(const std::string& path) {
  const auto j = read_json(path);
  if (j.contains("steps") && j.contains("source")) {
    const auto report = verify_script(script_from_json(j));
    auto out = script_report_to_json(report);
    out["verdict"] = report.passed() ? "PASS" : "FAIL";
    emit(out);
    return report.passed() ? 0 : kVerificationFailure;
  }
  const auto& cj = certificate_part(j);
  if (!cj.contains("nodes")) fail(ErrorCode::MalformedInput, "expected a subdivision script or a certificate");
  const auto report = verify(certificate_from_json(cj));
  auto out = verification_to_json(report);
  out["verdict"] = report.ok ? "PASS" : "FAIL";
  emit(out);
  return report.ok ? 0 : kVerificationFailure;
}

std::vector<std::vector<int>> parse_tower(const std::string& spec, std::uint64_t& p, int rank) {
  int lo = 1, hi = 1;
  for (const auto& part : split(spec, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorCode::MalformedInput, "tower item '" + part + "' lacks '='");
    const auto key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "p") {
      p = std::stoull(val);
    } else if (key == "k") {
      const auto dots = val.find("..");
      lo = std::stoi(val.substr(0, dots));
      hi = dots == std::string::npos ? lo : std::stoi(val.substr(dots + 2));
    } else {
      fail(ErrorCode::MalformedInput, "unknown tower key '" + key + "'");
    }
  }
  if (lo < 1 || hi < lo) fail(ErrorCode::MalformedInput, "tower range must satisfy 1 <= lo <= hi");
  std::vector<std::vector<int>> chain;
  for (int k = lo; k <= hi; ++k) chain.push_back(std::vector<int>(static_cast<std::size_t>(rank), k));
  return chain;
}

std::string growth_table(const GrowthSeries& g) {
  std::ostringstream out;
  out << "| exponents | index | b_Q / index | b_F" << g.p << " / index |\n|---|---|---|---|\n";
  for (const auto& r : g.rows) {
    std::vector<std::string> bq, bp;
    for (const auto& q : r.betti_Q) bq.push_back(q.get_str());
    for (const auto& q : r.betti_Fp) bp.push_back(q.get_str());
    out << "| " << (r.exponents.empty() ? "base" : join_str(strs(r.exponents), ",")) << " | " << r.index << " | "
        << join_str(bq, " ") << " | " << join_str(bp, " ") << " |\n";
  }
  return out.str();
}

int torsion_command(const std::string& dir, int n, std::uint64_t p) {
  if (!fs::is_directory(dir)) fail(ErrorCode::MissingArtifacts, "'" + dir + "' is not a directory");
  std::vector<std::pair<std::uint64_t, HomologySummary>> chain;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".json") continue;
    const auto j = read_json(e.path().string());
    if (!j.contains("index")) fail(ErrorCode::InconsistentChain, e.path().filename().string() + " has no index");
    chain.emplace_back(j["index"].get<std::uint64_t>(), homology_from_json(j));
  }
  if (chain.empty()) fail(ErrorCode::MissingArtifacts, "no homology JSON files in '" + dir + "'");
  std::stable_sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const auto r = torsion_bookkeeping(chain, n, p);
  json levels = json::array();
  for (const auto& l : r.levels) {
    json tn = json::array(), bq = json::array(), bp = json::array();
    for (const auto& q : l.t_normalized) tn.push_back(q.get_str());
    for (const auto& q : l.betti_Q_normalized) bq.push_back(q.get_str());
    for (const auto& q : l.betti_Fp_normalized) bp.push_back(q.get_str());
    levels.push_back({{"index", l.index}, {"t", l.t}, {"t_normalized", tn}, {"betti_Q_normalized", bq},
                      {"betti_Fp_normalized", bp}, {"logtor_normalized", l.logtor_normalized}, {"uc_ok", l.uc_ok}});
  }
  emit({{"p", r.p}, {"n", r.n}, {"levels", levels}, {"hypothesis_observed", r.hypothesis_observed},
        {"torsion_observed", r.torsion_observed}, {"top_vanishing_observed", r.top_vanishing_observed},
        {"any_torsion", r.any_torsion}, {"verdict", r.verdict}});
  return 0;
}

int report_command(const std::string& dir) {
  if (!fs::is_directory(dir)) fail(ErrorCode::MissingArtifacts, "'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::ostringstream complexes, homology, growth, certs;
  for (const auto& f : files) {
    const auto j = read_json(f.string());
    const auto name = f.filename().string();
    if (j.contains("maximal_simplices") || j.contains("catalog")) {
      const auto L = complex_from_json(j);
      complexes << "| " << name << " | " << join_str(strs(fvector_to_json(f_vector(L)).get<std::vector<std::size_t>>()), ", ")
                << " | " << euler_l2(L).get_str() << " |\n";
    } else if (j.contains("betti_Q")) {
      std::string torsion = "none";
      for (const auto& row : j["torsion"])
        if (!row.empty()) torsion = "present";
      homology << "| " << name << " | " << join_str(strs(j["betti_Q"].get<std::vector<std::size_t>>()), ", ") << " | "
               << torsion << " |\n";
    } else if (j.contains("rows") && j.contains("p")) {
      for (const auto& r : j["rows"])
        growth << "| " << name << " | " << r["index"].get<std::uint64_t>() << " | "
               << join_str(r["betti_Fp_normalized"].get<std::vector<std::string>>(), ", ") << " |\n";
    } else if (certificate_part(j).contains("nodes")) {
      const auto c = certificate_from_json(certificate_part(j));
      const auto v = verify(c);
      std::vector<std::string> degs;
      for (const auto& d : c.conclusion().degrees) degs.push_back(to_string(d));
      certs << "| " << name << " | " << join_str(degs, ", ") << " | " << (v.ok ? "PASS" : "FAIL") << " |\n";
    }
  }
  const auto sections = std::vector<std::pair<std::string, std::string>>{
      {"## Complexes\n\n| file | f-vector | euler_l2 |\n|---|---|---|\n", complexes.str()},
      {"## Homology\n\n| file | b (Q) | torsion |\n|---|---|---|\n", homology.str()},
      {"## Growth\n\n| file | index | b (F_p) / index |\n|---|---|---|\n", growth.str()},
      {"## Certificates\n\n| file | conclusion | verify |\n|---|---|---|\n", certs.str()}};
  bool any = false;
  for (const auto& [head, body] : sections) {
    if (body.empty()) continue;
    std::cout << (any ? "\n" : "") << head << body;
    any = true;
  }
  if (!any) fail(ErrorCode::MissingArtifacts, "no recognizable JSON artifacts in '" + dir + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag complexes, Davis complexes, cover homology and L2-Betti vanishing certificates"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for independent jobs")->check(CLI::PositiveNumber);
  bool table = false;
  int code = 0;

  // build
  auto* build = app.add_subcommand("build", "Build a complex from maximal simplices, a catalog name or a JSON file");
  std::string simplices, catalog_name, build_input;
  int param = -1;
  build->add_option("--simplices", simplices, "Maximal simplices, e.g. 'a,b;b,c;c,a'");
  build->add_option("--catalog", catalog_name, "Catalog name");
  build->add_option("--param", param, "Catalog parameter");
  build->add_option("input", build_input, "Complex JSON ('-' for stdin)");
  build->add_flag("--table", table, "Print an f-vector table instead of JSON");
  build->callback([&] {
    SimplicialComplex L;
    if (!simplices.empty()) {
      std::vector<std::vector<VertexId>> maxs;
      for (const auto& s : split(simplices, ';')) maxs.push_back(split(s, ','));
      L = complex_from_json({{"maximal_simplices", maxs}});
    } else if (!catalog_name.empty()) {
      L = special_complex(catalog_name, param);
    } else if (!build_input.empty()) {
      L = load_complex(build_input);
    } else {
      fail(ErrorCode::MalformedInput, "give --simplices, --catalog or an input file");
    }
    if (table)
      std::cout << fvector_table(L);
    else
      emit(complex_to_json(L));
  });

  auto* info = app.add_subcommand("info", "Dimension, f-vector, flagness and Euler data");
  std::string info_input;
  info->add_option("input", info_input)->required();
  info->add_flag("--table", table, "Print an f-vector table instead of JSON");
  info->callback([&] {
    const auto L = load_complex(info_input);
    if (table)
      std::cout << fvector_table(L);
    else
      emit(info_json(L));
  });

  auto* lk = app.add_subcommand("link", "Link (or star) of a simplex");
  std::string lk_input, lk_simplex;
  bool want_star = false;
  lk->add_option("input", lk_input)->required();
  lk->add_option("--simplex", lk_simplex, "Comma-separated vertices")->required();
  lk->add_flag("--star", want_star, "Closed star instead of link");
  lk->callback([&] {
    const auto L = load_complex(lk_input);
    const auto s = parse_simplex(lk_simplex);
    emit(complex_to_json(want_star ? star(L, s) : link(L, s)));
  });

  auto* jn = app.add_subcommand("join", "Join of two complexes on disjoint vertex sets");
  std::string ja, jb;
  jn->add_option("a", ja)->required();
  jn->add_option("b", jb)->required();
  jn->callback([&] { emit(complex_to_json(join(load_complex(ja), load_complex(jb)))); });

  auto* sub = app.add_subcommand("subdivide", "Subdivide an edge");
  std::string sub_input, sub_edge_s;
  sub->add_option("input", sub_input)->required();
  sub->add_option("--edge", sub_edge_s, "u,v")->required();
  sub->callback([&] { emit(complex_to_json(sub_edge(load_complex(sub_input), parse_simplex(sub_edge_s)))); });

  auto* bary = app.add_subcommand("barycentric", "Barycentric subdivision b(L, K); K empty by default");
  std::string bary_input, bary_rel;
  bary->add_option("input", bary_input)->required();
  bary->add_option("--rel", bary_rel, "Subcomplex K kept unsubdivided");
  bary->callback([&] {
    const auto L = load_complex(bary_input);
    const auto K = bary_rel.empty() ? SimplicialComplex{} : load_complex(bary_rel);
    emit(complex_to_json(relative_barycentric(L, K)));
  });

  auto* scr = app.add_subcommand("script", "Generate an edge-subdivision script");
  std::string kind, scr_l, scr_k, scr_j;
  int oct_n = 2;
  scr->add_option("kind", kind, "octahedron | relative | twosubs")
      ->required()
      ->check(CLI::IsMember({"octahedron", "relative", "twosubs"}));
  scr->add_option("-n", oct_n, "Octahedron dimension");
  scr->add_option("--complex", scr_l, "L (relative, twosubs)");
  scr->add_option("--sub", scr_k, "K (octahedron: inside the boundary simplex; relative, twosubs)");
  scr->add_option("--inner", scr_j, "J (twosubs)");
  scr->callback([&] {
    const auto opt = [](const std::string& p) { return p.empty() ? SimplicialComplex{} : load_complex(p); };
    SubdivisionScript s;
    if (kind == "octahedron") {
      s = script_octahedron(oct_n, opt(scr_k));
    } else {
      if (scr_l.empty()) fail(ErrorCode::MalformedInput, "--complex is required");
      s = kind == "relative" ? script_relative(load_complex(scr_l), opt(scr_k))
                             : script_twosubs(load_complex(scr_l), opt(scr_k), opt(scr_j));
    }
    emit(script_to_json(s));
  });

  auto* ver = app.add_subcommand("verify", "Verify a subdivision script or a certificate");
  std::string ver_input;
  ver->add_option("input", ver_input)->required();
  ver->callback([&] { code = verify_file(ver_input); });

  auto* dav = app.add_subcommand("davis", "Chambers, basic constructions and covers");
  std::string dav_kind, dav_input, dav_quotient, dav_exponents;
  bool fine = false;
  std::uint64_t dav_p = 2;
  int dav_rank = 1;
  dav->add_option("kind", dav_kind, "chamber | pl | cover")->required()->check(CLI::IsMember({"chamber", "pl", "cover"}));
  dav->add_option("input", dav_input, "Complex JSON (chamber, pl)");
  dav->add_option("--base", dav_input, "Cube complex or complex JSON (cover)");
  dav->add_option("--quotient", dav_quotient, "Finite quotient of W_L instead of (Z/2)^{L^0}");
  dav->add_flag("--fine", fine, "One cell per chamber cell and coset instead of one cube per coset");
  dav->add_option("--p", dav_p, "Prime for covers");
  dav->add_option("--rank", dav_rank, "Number of Z/p factors (exponent 1 each)");
  dav->add_option("--exponents", dav_exponents, "Exponents k_i of Z/p^{k_i}, comma separated");
  dav->callback([&] {
    if (dav_input.empty()) fail(ErrorCode::MalformedInput, "an input is required");
    if (dav_kind == "chamber") {
      emit(chamber_json(load_complex(dav_input)));
    } else if (dav_kind == "pl") {
      const auto L = load_complex(dav_input);
      const auto q = dav_quotient.empty() ? canonical_quotient(L) : quotient_from_json(L, read_json(dav_quotient));
      emit(cube_complex_to_json(fine ? basic_construction(q) : davis_cubulation(q)));
    } else {
      std::vector<int> ex;
      if (!dav_exponents.empty())
        for (const auto& e : split(dav_exponents, ',')) ex.push_back(std::stoi(e));
      else
        ex.assign(static_cast<std::size_t>(dav_rank), 1);
      emit(cube_complex_to_json(abelian_p_cover(load_space(dav_input), dav_p, ex)));
    }
  });

  auto* hom = app.add_subcommand("homology", "Cellular homology of a cube complex");
  std::string hom_input, field = "Q";
  std::uint64_t hom_p = 2;
  bool integral = false;
  hom->add_option("input", hom_input, "Cube complex JSON, or a complex JSON for P_L")->required();
  hom->add_option("--field", field, "Q | Fp")->check(CLI::IsMember({"Q", "Fp"}));
  hom->add_option("--p", hom_p, "Prime for --field Fp");
  hom->add_flag("--integral", integral, "Smith normal form with torsion");
  hom->callback([&] {
    const auto X = load_space(hom_input);
    json out;
    if (integral) {
      out = homology_to_json(integral_homology(X, field == "Fp" ? std::vector<std::uint64_t>{hom_p} : std::vector<std::uint64_t>{}));
    } else {
      const auto b = field == "Q" ? betti(X) : betti(X, hom_p);
      out = {{"field", field == "Q" ? "Q" : "F" + std::to_string(hom_p)}, {"betti", b}};
    }
    out["index"] = X.index;
    emit(out);
  });

  auto* gro = app.add_subcommand("growth", "Normalized Betti numbers along a tower of abelian p-covers");
  std::string gro_base, tower = "p=2,k=1..3";
  int gro_rank = 1;
  gro->add_option("--base", gro_base, "Cube complex or complex JSON")->required();
  gro->add_option("--tower", tower, "p=P,k=LO..HI: covers with deck group (Z/p^k)^rank");
  gro->add_option("--rank", gro_rank, "Number of cyclic factors");
  gro->add_flag("--table", table, "Print a table instead of JSON");
  gro->callback([&] {
    std::uint64_t p = 2;
    const auto chain = parse_tower(tower, p, gro_rank);
    const auto g = growth_series(load_space(gro_base), chain, p, jobs);
    if (table)
      std::cout << growth_table(g);
    else
      emit(growth_to_json(g));
  });

  auto* cer = app.add_subcommand("certify", "Derive L2-Betti facts of W_L with a checkable certificate");
  std::string cer_input, goal = "all";
  int ch = 0, assume_sphere = -1;
  bool trivalent = false, minimal = false;
  cer->add_option("input", cer_input)->required();
  cer->add_option("--char", ch, "Characteristic of the field (0 or a prime)");
  cer->add_option("--goal", goal, "'all' or comma-separated degrees");
  cer->add_option("--assume-sphere", assume_sphere, "Take the input as a triangulated sphere of this dimension");
  cer->add_flag("--trivalent", trivalent, "Decide b_2 = 0 for a graph of degree <= 3");
  cer->add_flag("--minimally-branching", minimal, "Decide b_n = 0 under the at-most-three-branching hypotheses");
  cer->callback([&] {
    const auto L = load_complex(cer_input);
    if (trivalent) {
      const auto r = trivalent_decision(L, ch);
      if (r.certificate) {
        auto out = certificate_summary(*r.certificate);
        out["result"] = "certificate";
        out["pair_choice"] = r.pair_choice;
        emit(out);
      } else {
        emit({{"result", "k33_witness"}, {"map", witness_json(*r.k33_witness)}});
      }
      return;
    }
    if (minimal) {
      const auto r = minimally_branching_decision(L, ch);
      json out = {{"n", r.n}};
      if (r.certificate) {
        out.update(certificate_summary(*r.certificate));
        out["result"] = "certificate";
      } else if (r.three_join_witness) {
        out["result"] = "three_join_witness";
        out["map"] = witness_json(*r.three_join_witness);
      } else {
        out["result"] = "stuck";
        out["note"] = r.note;
      }
      emit(out);
      return;
    }
    DeriveOptions opts;
    if (assume_sphere >= 0) opts.assumed_sphere = SphereTag{assume_sphere, {{"kind", "assumed"}}};
    const auto r = derive(L, ch, parse_goal(goal), opts);
    auto out = certificate_summary(r.certificate);
    out["complete"] = r.complete;
    json frontier = json::array();
    for (const auto& f : r.frontier) frontier.push_back(complex_to_json(f));
    out["frontier"] = std::move(frontier);
    emit(out);
  });

  auto* tor = app.add_subcommand("torsion", "Torsion-growth bookkeeping over a chain of homology files");
  std::string chain_dir;
  int tor_n = 0;
  std::uint64_t tor_p = 2;
  tor->add_option("--chain", chain_dir, "Directory of homology JSON files with an index field")->required();
  tor->add_option("--n", tor_n, "The degree n of the lemma");
  tor->add_option("--p", tor_p, "Prime");
  tor->callback([&] { code = torsion_command(chain_dir, tor_n, tor_p); });

  auto* rep = app.add_subcommand("report", "Markdown summary tables of a directory of JSON artifacts");
  std::string rep_dir;
  rep->add_option("dir", rep_dir)->required();
  rep->callback([&] { code = report_command(rep_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e);
    return c == 0 ? 0 : kInputError;
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "MalformedInput"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "MalformedInput"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << json{{"error", "MalformedInput"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  }
  return code;
}
