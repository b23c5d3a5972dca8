#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsg/group.hpp"
#include "nsg/ns_graph.hpp"
#include "nsg/solvabilizer.hpp"
#include "nsg/subgroup.hpp"

namespace nsg {

/// Knobs shared by analyze, verify and graph runs.
struct AnalysisConfig {
  std::size_t exact_independence_limit = 150;
  std::size_t k44_budget = kDefaultK44Budget;
  double audit_fraction = 0.10;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
};

nlohmann::json to_json(const AnalysisConfig& config);

/// Everything derived from one group: engine, classes, radical, the full
/// solvabilizer table, and both graphs. Graphs are built on first use.
class Analysis {
 public:
  Analysis(const FiniteGroup& g, const AnalysisConfig& config = {});

  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const FiniteGroup& group() const noexcept { return *group_; }
  const AnalysisConfig& config() const noexcept { return config_; }
  SubgroupEngine& engine() noexcept { return *engine_; }
  const ConjugacyClasses& classes() const noexcept { return classes_; }
  const SubgroupSet& radical() const noexcept { return radical_; }
  const SolvabilizerTable& table() const noexcept { return table_; }
  bool solvable() const noexcept { return radical_.size() == group_->order(); }

  /// |G| - |Sol(G)|, the vertex count of the induced graph.
  std::size_t induced_order() const noexcept { return group_->order() - radical_.size(); }

  NsGraph& full_graph();
  NsGraph& induced_graph();

  /// Conjugacy classes outside the radical, largest first (ties by index).
  std::vector<IndexSet> nonradical_classes_by_size() const;

 private:
  const FiniteGroup* group_;
  AnalysisConfig config_;
  std::unique_ptr<SubgroupEngine> engine_;
  ConjugacyClasses classes_;
  SubgroupSet radical_;
  SolvabilizerTable table_;
  std::optional<NsGraph> full_;
  std::optional<NsGraph> induced_;
};

/// Computes the graph invariants (degree sequence, diameter, regularity,
/// independence numbers of both graphs, K_{4,4}, tree and bipartite
/// verdicts) and records them in each graph's invariant cache. Returns
/// the combined record.
nlohmann::json compute_invariants(Analysis& a);

nlohmann::json to_json(const FiniteGroup& g, const SolvabilizerResult& r);
nlohmann::json to_json(const OrdSolProfile& profile);

/// Full analysis document: radical, per-class solvabilizers, degree
/// sequence and invariants.
nlohmann::json analysis_report(Analysis& a, const std::string& group_name);

nlohmann::json group_descriptor(const FiniteGroup& g, const std::string& name);

}  // namespace nsg
