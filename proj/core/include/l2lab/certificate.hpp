#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "l2lab/complex.hpp"
#include "l2lab/knowledge.hpp"

namespace l2lab {

/// One derivation step: `conclusion` about b_*(W_complex; F), justified by
/// `rule` applied to the conclusions of earlier nodes plus a side record.
struct CertNode {
  std::size_t id = 0;
  std::string rule;
  SimplicialComplex complex;
  BettiKnowledge conclusion;
  std::vector<std::size_t> premises;
  nlohmann::json side = nlohmann::json::object();
};

/// Derivation DAG, premises before users.
struct Certificate {
  std::vector<CertNode> nodes;
  std::size_t root = 0;

  const CertNode& root_node() const { return nodes.at(root); }
  const BettiKnowledge& conclusion() const { return root_node().conclusion; }
  std::size_t count_rule(const std::string& rule) const;
};

/// L triangulates S^dimension. provenance is {"kind": "catalog", "name", "param"}
/// or {"kind": "assumed"}.
struct SphereTag {
  int dimension = 0;
  nlohmann::json provenance;
};

/// Tag for complexes equal (labels included) to a catalog sphere.
std::optional<SphereTag> catalog_sphere_tag(const SimplicialComplex& L);

std::vector<std::string> rule_names();

/// What `rule` yields for `complex` given the premises' stated conclusions,
/// after checking every side condition; or why it does not apply.
struct RuleOutcome {
  std::optional<BettiKnowledge> knowledge;
  std::string error;
};

RuleOutcome evaluate_rule(const std::string& rule, const SimplicialComplex& complex, int characteristic,
                          const std::vector<const CertNode*>& premises, const nlohmann::json& side);

struct NodeFailure {
  std::size_t id = 0;
  std::string rule;
  std::string reason;
};

struct VerificationReport {
  bool ok = true;
  std::vector<NodeFailure> failures;
  /// Sphere tags taken on the user's word.
  std::vector<std::string> assumptions;
  std::size_t nodes_checked = 0;
};

/// Re-derives every node from its premises and checks the stated conclusion
/// is implied.
VerificationReport verify(const Certificate& cert);

struct DeriveOptions {
  /// Applies to the input complex only.
  std::optional<SphereTag> assumed_sphere;
  std::size_t max_nodes = 200'000;
};

struct DeriveResult {
  Certificate certificate;
  /// Every goal degree is Zero or Exact.
  bool complete = false;
  /// Complexes the search left with undetermined degrees.
  std::vector<SimplicialComplex> frontier;
};

/// Searches the rules in fixed priority. An empty goal means every degree.
DeriveResult derive(const SimplicialComplex& L, int characteristic, const std::set<int>& goal = {},
                    const DeriveOptions& opts = {});

/// Node store shared by derive and the decision procedures. add() computes
/// each conclusion with evaluate_rule, so what it builds verifies.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(int characteristic, DeriveOptions opts = {});

  /// Throws std::logic_error if the rule does not apply.
  std::size_t add(const std::string& rule, const SimplicialComplex& L, std::vector<std::size_t> premises,
                  nlohmann::json side = nlohmann::json::object());
  /// Memoized on the labelled complex.
  std::size_t derive(const SimplicialComplex& L);

  const CertNode& node(std::size_t id) const { return nodes_.at(id); }
  const BettiKnowledge& knowledge(std::size_t id) const { return nodes_.at(id).conclusion; }
  int characteristic() const { return characteristic_; }
  /// The assumed sphere tag of the options applies to this complex.
  void set_input(const SimplicialComplex& L) { input_ = L; }
  const std::vector<SimplicialComplex>& frontier() const { return frontier_; }
  /// Keeps what `root` depends on, renumbered.
  Certificate finish(std::size_t root) const;

 private:
  std::size_t derive_uncached(const SimplicialComplex& L);
  std::optional<std::size_t> try_octahedron(const SimplicialComplex& L);
  std::optional<std::size_t> try_relative_barycentric(const SimplicialComplex& L);

  int characteristic_;
  DeriveOptions opts_;
  std::vector<CertNode> nodes_;
  std::map<std::string, std::size_t> memo_;
  std::vector<SimplicialComplex> frontier_;
  std::optional<SimplicialComplex> input_;
};

nlohmann::json knowledge_to_json(const BettiKnowledge& k);
BettiKnowledge knowledge_from_json(const nlohmann::json& j, int characteristic);
nlohmann::json certificate_to_json(const Certificate& c);
/// Structural parse only; soundness is verify's job.
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json verification_to_json(const VerificationReport& r);

}  // namespace l2lab
