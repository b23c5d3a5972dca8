#include "nsg/analysis.hpp"

#include <algorithm>

#include "nsg/errors.hpp"
#include "nsg/version.hpp"

namespace nsg {

nlohmann::json to_json(const AnalysisConfig& config) {
  return {{"exact_independence_limit", config.exact_independence_limit},
          {"k44_budget", config.k44_budget},
          {"audit_fraction", config.audit_fraction},
          {"seed", config.seed}};
}

Analysis::Analysis(const FiniteGroup& g, const AnalysisConfig& config)
    : group_(&g), config_(config), engine_(std::make_unique<SubgroupEngine>(g)), classes_(conjugacy_classes(g)) {
  radical_ = engine_->solvable_radical();
  table_ = all_solvabilizers(*engine_, classes_,
                             {.audit_fraction = config.audit_fraction, .seed = config.seed, .jobs = config.jobs});
}

NsGraph& Analysis::full_graph() {
  if (!full_) full_ = NsGraph::build(*group_, table_, radical_, GraphMode::full);
  return *full_;
}

NsGraph& Analysis::induced_graph() {
  if (!induced_) induced_ = NsGraph::build(*group_, table_, radical_, GraphMode::induced);
  return *induced_;
}

std::vector<IndexSet> Analysis::nonradical_classes_by_size() const {
  std::vector<IndexSet> out;
  for (const auto& c : classes_.classes) {
    if (!radical_.contains(c.front())) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() > b.size(); });
  return out;
}

namespace {

nlohmann::json independence_json(const FiniteGroup& g, const IndependenceResult& r, std::size_t limit) {
  nlohmann::json set = nlohmann::json::array();
  for (Elem e : r.set) set.push_back(g.element(e).to_cycle_string());
  return {{"value", r.value},
          {"kind", r.kind == BoundKind::exact ? "exact" : "lower-bound"},
          {"exact_limit", limit},
          {"set", r.set},
          {"set_cycles", std::move(set)}};
}

}  // namespace

nlohmann::json compute_invariants(Analysis& a) {
  const FiniteGroup& g = a.group();
  NsGraph& full = a.full_graph();
  NsGraph& induced = a.induced_graph();

  // Cyclic subgroups of maximal order seed the heuristic path.
  std::uint32_t max_order = 1;
  for (Elem x = 0; x < g.order(); ++x) max_order = std::max(max_order, g.element_order(x));
  IndependenceOptions opts{.exact_limit = a.config().exact_independence_limit, .node_budget = 20'000'000, .seeds = {}};
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == max_order) {
      opts.seeds.push_back(g.cyclic_subgroup(x));
      break;
    }
  }
  full.invariants()["independence"] =
      independence_json(g, independence_number(full, opts), opts.exact_limit);
  full.invariants()["edges"] = full.edge_count();
  full.invariants()["vertices"] = full.vertex_count();

  nlohmann::json& inv = induced.invariants();
  inv["vertices"] = induced.vertex_count();
  inv["edges"] = induced.edge_count();
  inv["degree_sequence"] = degree_sequence(induced);
  if (a.solvable()) {
    inv["empty"] = true;
  } else {
    const auto d = diameter(induced);
    inv["diameter"] = d.diameter ? nlohmann::json(*d.diameter) : nlohmann::json("infinite");
    const auto reg = is_regular(induced);
    inv["regular"] = reg.regular;
    IndependenceOptions iopts{.exact_limit = a.config().exact_independence_limit, .node_budget = 20'000'000, .seeds = {}};
    inv["independence"] = independence_json(g, independence_number(induced, iopts), iopts.exact_limit);
    inv["tree"] = is_tree(induced);
    const auto cycle = find_odd_cycle(induced);
    inv["bipartite"] = !cycle.has_value();
    if (cycle) inv["odd_cycle"] = *cycle;
    try {
      const auto classes = a.nonradical_classes_by_size();
      const auto w = find_k44(induced, a.config().k44_budget, classes);
      if (w) {
        inv["k44"] = {{"left", w->left}, {"right", w->right}, {"probes", w->probes}};
        inv["planar"] = false;
      } else {
        inv["k44"] = nullptr;
        inv["planar"] = "undecided";
      }
    } catch (const SearchBudgetExceeded& e) {
      inv["k44"] = {{"budget_exceeded", e.limit()}};
      inv["planar"] = "undecided";
    }
  }
  return {{"full", full.invariants()}, {"induced", induced.invariants()}};
}

nlohmann::json to_json(const FiniteGroup& g, const SolvabilizerResult& r) {
  return {{"element", r.element},
          {"cycles", g.element(r.element).to_cycle_string()},
          {"order", r.order},
          {"members-count", r.members.size()},
          {"degree", r.degree},
          {"cosets", r.coset_reps}};
}

nlohmann::json to_json(const OrdSolProfile& profile) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [size, count] : profile) out.push_back({{"size", size}, {"count", count}});
  return out;
}

nlohmann::json group_descriptor(const FiniteGroup& g, const std::string& name) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : g.generators()) gens.push_back(s.to_cycle_string());
  return {{"name", name}, {"degree", g.degree()}, {"order", g.order()}, {"generators", std::move(gens)}};
}

nlohmann::json analysis_report(Analysis& a, const std::string& group_name) {
  const FiniteGroup& g = a.group();
  nlohmann::json radical = nlohmann::json::array();
  for (Elem e : a.radical().members) radical.push_back(g.element(e).to_cycle_string());

  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : a.classes().classes) {
    const Elem rep = c.front();
    nlohmann::json entry = to_json(g, a.table()[rep]);
    entry["class_size"] = c.size();
    entry["centralizer_size"] = centralizer(g, rep).size();
    entry["in_radical"] = a.radical().contains(rep);
    classes.push_back(std::move(entry));
  }

  return {{"schema_version", kSchemaVersion},
          {"engine_version", kEngineVersion},
          {"group", group_descriptor(g, group_name)},
          {"params", to_json(a.config())},
          {"solvable", a.solvable()},
          {"radical", {{"order", a.radical().size()}, {"elements", std::move(radical)}}},
          {"classes", std::move(classes)},
          {"profile", to_json(ord_sol(a.table()))},
          {"sweep",
           {{"direct_scans", a.table().direct_scans},
            {"coprime_links", a.table().coprime_links},
            {"transported", a.table().transported},
            {"audited", a.table().audited}}},
          {"invariants", compute_invariants(a)}};
}

}  // namespace nsg
