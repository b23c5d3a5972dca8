#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nsg/bitset.hpp"
#include "nsg/group.hpp"
#include "nsg/solvabilizer.hpp"
#include "nsg/subgroup.hpp"

namespace nsg {

/// Local vertex position inside an NsGraph (not an element index).
using Vertex = std::uint32_t;

enum class GraphMode { full, induced };

std::string to_string(GraphMode mode);

/// The non-solvable graph S_G (full mode) or its restriction to G \ R(G)
/// (induced mode). Adjacency is a symmetric bit matrix; vertices are kept
/// sorted by element index.
class NsGraph {
 public:
  static NsGraph build(const FiniteGroup& g, const SolvabilizerTable& sol, const SubgroupSet& radical,
                       GraphMode mode);

  /// Synthetic graph for fixtures and reloads. `ids` must be strictly
  /// increasing; edges are pairs of ids. Throws PreconditionError on loops,
  /// unknown ids, or unsorted ids.
  static NsGraph from_edges(std::vector<Elem> ids, std::span<const std::pair<Elem, Elem>> edges,
                            GraphMode mode = GraphMode::induced, std::vector<std::string> labels = {},
                            std::vector<std::uint32_t> orders = {});

  GraphMode mode() const noexcept { return mode_; }
  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept;

  Elem id(Vertex v) const { return ids_[v]; }
  std::span<const Elem> ids() const noexcept { return ids_; }
  std::optional<Vertex> vertex_of(Elem id) const;
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::uint32_t element_order(Vertex v) const { return orders_[v]; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return degrees_[v]; }

  /// Computed invariants with the parameters they were computed under.
  nlohmann::json& invariants() noexcept { return invariants_; }
  const nlohmann::json& invariants() const noexcept { return invariants_; }

 private:
  NsGraph() = default;
  void finish();

  GraphMode mode_ = GraphMode::induced;
  std::vector<Elem> ids_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> orders_;
  std::vector<Bitset> rows_;
  std::vector<std::size_t> degrees_;
  nlohmann::json invariants_ = nlohmann::json::object();
};

/// Vertex degrees, ascending.
std::vector<std::size_t> degree_sequence(const NsGraph& g);

struct DiameterReport {
  /// nullopt when the graph is disconnected.
  std::optional<std::size_t> diameter;
  /// (x, y, z) element ids: for every nonadjacent pair x < y, a common neighbor z.
  std::vector<std::array<Elem, 3>> common_neighbors;
  /// Nonadjacent pairs with no common neighbor.
  std::vector<std::pair<Elem, Elem>> unwitnessed;
};

/// BFS from every vertex. In induced mode a disconnected graph throws
/// InvariantViolation; in full mode it reports an infinite diameter.
DiameterReport diameter(const NsGraph& g);

struct RegularityReport {
  bool regular = true;
  /// Two element ids with different degrees when irregular.
  std::optional<std::pair<Elem, Elem>> witness;
};

RegularityReport is_regular(const NsGraph& g);

enum class BoundKind { exact, lower_bound };

struct IndependenceResult {
  std::size_t value = 0;
  BoundKind kind = BoundKind::exact;
  /// Element ids of an independent set of size `value`.
  IndexSet set;
  std::size_t nodes = 0;
};

struct IndependenceOptions {
  /// Graphs up to this many vertices get an exact branch-and-bound answer.
  std::size_t exact_limit = 150;
  /// Node cap for branch and bound; hitting it downgrades to lower_bound.
  std::size_t node_budget = 20'000'000;
  /// Candidate sets (element ids) that seed the heuristic. Non-independent
  /// seeds are ignored.
  std::vector<IndexSet> seeds;
};

IndependenceResult independence_number(const NsGraph& g, const IndependenceOptions& options = {});

/// True iff the element ids form an independent set of g.
bool is_independent(const NsGraph& g, std::span<const Elem> ids);

struct K44Witness {
  std::array<Elem, 4> left{};
  std::array<Elem, 4> right{};
  std::size_t probes = 0;
};

inline constexpr std::size_t kDefaultK44Budget = 10'000'000;

/// Searches for two disjoint 4-sets with all 16 cross edges. The parts may
/// have internal edges. `seed_classes` (element ids, largest first) are tried
/// before the exhaustive pivoted enumeration. Returns nullopt when no K_{4,4}
/// exists; throws SearchBudgetExceeded when `budget` adjacency probes run out.
std::optional<K44Witness> find_k44(const NsGraph& g, std::size_t budget = kDefaultK44Budget,
                                   std::span<const IndexSet> seed_classes = {});

/// Checks the 16 cross adjacencies and disjointness.
bool verify_k44(const NsGraph& g, const K44Witness& w);

bool is_connected(const NsGraph& g);
bool is_tree(const NsGraph& g);

/// Odd cycle as a closed walk of distinct element ids (first vertex not
/// repeated), or nullopt if the graph is bipartite.
std::optional<std::vector<Elem>> find_odd_cycle(const NsGraph& g);
inline bool has_odd_cycle(const NsGraph& g) { return find_odd_cycle(g).has_value(); }

enum class ExportFormat { dot, graphml, json };

ExportFormat parse_export_format(const std::string& name);

void write_dot(const NsGraph& g, std::ostream& os);
void write_graphml(const NsGraph& g, std::ostream& os);
nlohmann::json to_json(const NsGraph& g);
/// Inverse of to_json. Throws ParseError on malformed documents.
NsGraph graph_from_json(const nlohmann::json& doc);

/// Writes the graph to `path`. Throws IoError if the path is not writable.
void export_graph(const NsGraph& g, ExportFormat format, const std::string& path);
std::string export_graph(const NsGraph& g, ExportFormat format);

}  // namespace nsg
