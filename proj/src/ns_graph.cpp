#include "nsg/ns_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include "nsg/errors.hpp"

namespace nsg {

std::string to_string(GraphMode mode) { return mode == GraphMode::full ? "full" : "induced"; }

NsGraph NsGraph::build(const FiniteGroup& g, const SolvabilizerTable& sol, const SubgroupSet& radical,
                       GraphMode mode) {
  if (sol.results.size() != g.order()) {
    throw PreconditionError("build_graph: solvabilizer table does not match the group");
  }
  NsGraph out;
  out.mode_ = mode;
  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.order(), kAbsent);
  for (Elem e = 0; e < g.order(); ++e) {
    if (mode == GraphMode::induced && radical.contains(e)) continue;
    local[e] = static_cast<Vertex>(out.ids_.size());
    out.ids_.push_back(e);
    out.labels_.push_back(g.element(e).to_cycle_string());
    out.orders_.push_back(g.element_order(e));
  }

  const std::size_t n = out.ids_.size();
  out.rows_.assign(n, Bitset(n));
  for (Vertex u = 0; u < n; ++u) {
    Bitset& row = out.rows_[u];
    row.set_all();
    for (Elem m : sol[out.ids_[u]].members) {
      if (local[m] != kAbsent) row.reset(local[m]);
    }
    if (row.test(u)) throw InvariantViolation("build_graph: element outside its own solvabilizer");
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (out.rows_[u].test(v) != out.rows_[v].test(u)) {
        throw InvariantViolation("build_graph: solvable-pair relation is not symmetric at (" +
                                 std::to_string(out.ids_[u]) + ", " + std::to_string(out.ids_[v]) + ")");
      }
    }
  }
  out.finish();
  return out;
}

NsGraph NsGraph::from_edges(std::vector<Elem> ids, std::span<const std::pair<Elem, Elem>> edges,
                            GraphMode mode, std::vector<std::string> labels,
                            std::vector<std::uint32_t> orders) {
  if (!std::is_sorted(ids.begin(), ids.end()) ||
      std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw PreconditionError("from_edges: vertex ids must be strictly increasing");
  }
  NsGraph out;
  out.mode_ = mode;
  const std::size_t n = ids.size();
  out.ids_ = std::move(ids);
  out.labels_ = labels.empty() ? std::vector<std::string>(n) : std::move(labels);
  out.orders_ = orders.empty() ? std::vector<std::uint32_t>(n, 0) : std::move(orders);
  if (out.labels_.size() != n || out.orders_.size() != n) {
    throw PreconditionError("from_edges: labels/orders do not match the vertex count");
  }
  out.rows_.assign(n, Bitset(n));
  for (auto [a, b] : edges) {
    auto u = out.vertex_of(a);
    auto v = out.vertex_of(b);
    if (!u || !v) throw PreconditionError("from_edges: edge references an unknown vertex");
    if (*u == *v) throw PreconditionError("from_edges: loops are not allowed");
    out.rows_[*u].set(*v);
    out.rows_[*v].set(*u);
  }
  out.finish();
  return out;
}

void NsGraph::finish() {
  degrees_.resize(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) degrees_[v] = rows_[v].count();
}

std::size_t NsGraph::edge_count() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0}) / 2;
}

std::optional<Vertex> NsGraph::vertex_of(Elem id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

std::vector<std::size_t> degree_sequence(const NsGraph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Eccentricity of `source`, or nullopt if some vertex is unreachable.
std::optional<std::size_t> eccentricity(const NsGraph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  Bitset visited(n);
  Bitset frontier(n);
  visited.set(source);
  frontier.set(source);
  std::size_t reached = 1;
  std::size_t depth = 0;
  while (reached < n) {
    Bitset next(n);
    for (std::size_t v = frontier.next(); v < n; v = frontier.next(v + 1)) next |= g.row(static_cast<Vertex>(v));
    next.subtract(visited);
    if (next.none()) return std::nullopt;
    visited |= next;
    reached += next.count();
    frontier = std::move(next);
    ++depth;
  }
  return depth;
}

}  // namespace

bool is_connected(const NsGraph& g) { return g.vertex_count() == 0 || eccentricity(g, 0).has_value(); }

DiameterReport diameter(const NsGraph& g) {
  DiameterReport report;
  const std::size_t n = g.vertex_count();
  std::size_t diam = 0;
  bool connected = true;
  for (Vertex v = 0; v < n && connected; ++v) {
    auto e = eccentricity(g, v);
    if (!e) {
      connected = false;
    } else {
      diam = std::max(diam, *e);
    }
  }
  if (!connected) {
    if (g.mode() == GraphMode::induced) {
      throw InvariantViolation("diameter: induced non-solvable graph is disconnected");
    }
  } else {
    report.diameter = diam;
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const Bitset common = g.row(u) & g.row(v);
      const std::size_t z = common.next();
      if (z < n) {
        report.common_neighbors.push_back({g.id(u), g.id(v), g.id(static_cast<Vertex>(z))});
      } else {
        report.unwitnessed.emplace_back(g.id(u), g.id(v));
      }
    }
  }
  return report;
}

RegularityReport is_regular(const NsGraph& g) {
  RegularityReport out;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) {
      out.regular = false;
      out.witness = std::make_pair(g.id(0), g.id(v));
      break;
    }
  }
  return out;
}

bool is_independent(const NsGraph& g, std::span<const Elem> ids) {
  std::vector<Vertex> vs;
  for (Elem id : ids) {
    auto v = g.vertex_of(id);
    if (!v) return false;
    vs.push_back(*v);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

namespace {

// Independent-set search. Works on local vertices; `free_rows` holds the
// complement adjacency (non-neighbors other than the vertex itself).
class IndependentSetSearch {
 public:
  IndependentSetSearch(const NsGraph& g, std::size_t node_budget) : g_(g), budget_(node_budget) {
    const std::size_t n = g.vertex_count();
    free_rows_.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      Bitset r = g.row(v);
      r.flip();
      r.reset(v);
      free_rows_.push_back(std::move(r));
    }
  }

  // Greedy minimum-degree construction starting from `start`, then
  // (1,2)-swap local search.
  std::vector<Vertex> heuristic(std::vector<Vertex> start) const {
    const std::size_t n = g_.vertex_count();
    Bitset in(n);
    for (Vertex v : start) in.set(v);
    Bitset candidates(n);
    candidates.set_all();
    for (Vertex v : start) candidates.subtract(g_.row(v)), candidates.reset(v);

    while (!candidates.none()) {
      std::size_t best = n;
      std::size_t best_deg = n + 1;
      for (std::size_t v = candidates.next(); v < n; v = candidates.next(v + 1)) {
        const std::size_t d = (g_.row(static_cast<Vertex>(v)) & candidates).count();
        if (d < best_deg) {
          best_deg = d;
          best = v;
        }
      }
      in.set(best);
      candidates.reset(best);
      candidates.subtract(g_.row(static_cast<Vertex>(best)));
    }
    local_search(in);

    std::vector<Vertex> out;
    for (std::size_t v = in.next(); v < n; v = in.next(v + 1)) out.push_back(static_cast<Vertex>(v));
    return out;
  }

  // Exact maximum independent set as a maximum clique in the complement,
  // with greedy-coloring bounds. Returns false if the node budget ran out.
  bool exact(std::vector<Vertex>& best) {
    best_ = best;
    const std::size_t n = g_.vertex_count();
    Bitset all(n);
    all.set_all();
    std::vector<Vertex> current;
    expand(current, all);
    best = best_;
    return !exhausted_;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  void local_search(Bitset& in) const {
    const std::size_t n = g_.vertex_count();
    bool improved = true;
    while (improved) {
      improved = false;
      std::vector<std::size_t> tight(n, 0);
      for (std::size_t v = in.next(); v < n; v = in.next(v + 1)) {
        const Bitset& r = g_.row(static_cast<Vertex>(v));
        for (std::size_t u = r.next(); u < n; u = r.next(u + 1)) ++tight[u];
      }
      for (std::size_t x = in.next(); x < n && !improved; x = in.next(x + 1)) {
        std::vector<Vertex> only_x;
        const Bitset& r = g_.row(static_cast<Vertex>(x));
        for (std::size_t u = r.next(); u < n; u = r.next(u + 1)) {
          if (tight[u] == 1 && !in.test(u)) only_x.push_back(static_cast<Vertex>(u));
        }
        for (std::size_t i = 0; i < only_x.size() && !improved; ++i) {
          for (std::size_t j = i + 1; j < only_x.size(); ++j) {
            if (!g_.adjacent(only_x[i], only_x[j])) {
              in.reset(x);
              in.set(only_x[i]);
              in.set(only_x[j]);
              improved = true;
              break;
            }
          }
        }
      }
      if (improved) {
        // Absorb any vertex left with no neighbor in the set.
        for (Vertex v = 0; v < n; ++v) {
          if (!in.test(v) && (g_.row(v) & in).none()) in.set(v);
        }
      }
    }
  }

  void expand(std::vector<Vertex>& current, Bitset candidates) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const std::size_t n = g_.vertex_count();

    // Greedy coloring of the candidates in the complement graph: each color
    // class is independent in the complement, so the color count bounds
    // how many more vertices can join.
    std::vector<Vertex> order;
    std::vector<std::size_t> colors;
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (!uncolored.none()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.next(); v < n; v = q.next(v + 1)) {
        uncolored.reset(v);
        q.subtract(free_rows_[v]);
        order.push_back(static_cast<Vertex>(v));
        colors.push_back(color);
      }
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      Bitset next = candidates & free_rows_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
      if (exhausted_) return;
    }
  }

  const NsGraph& g_;
  std::vector<Bitset> free_rows_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Vertex> best_;
};

}  // namespace

IndependenceResult independence_number(const NsGraph& g, const IndependenceOptions& options) {
  IndependenceResult out;
  if (g.vertex_count() == 0) return out;

  IndependentSetSearch search(g, options.node_budget);
  std::vector<Vertex> best = search.heuristic({});
  for (const auto& seed : options.seeds) {
    if (!is_independent(g, seed)) continue;
    std::vector<Vertex> start;
    for (Elem id : seed) start.push_back(*g.vertex_of(id));
    auto candidate = search.heuristic(std::move(start));
    if (candidate.size() > best.size()) best = std::move(candidate);
  }

  out.kind = BoundKind::lower_bound;
  if (g.vertex_count() <= options.exact_limit) {
    if (search.exact(best)) out.kind = BoundKind::exact;
    out.nodes = search.nodes();
  }
  out.value = best.size();
  for (Vertex v : best) out.set.push_back(g.id(v));
  std::sort(out.set.begin(), out.set.end());
  if (!is_independent(g, out.set)) throw InvariantViolation("independence_number: result is not independent");
  return out;
}

namespace {

class K44Search {
 public:
  K44Search(const NsGraph& g, std::size_t budget) : g_(g), budget_(budget) {}

  // Chooses four left vertices from `pool` (in order) whose common
  // neighborhood has at least four vertices; right part prefers `prefer`.
  std::optional<K44Witness> run(const std::vector<Vertex>& pool, const Bitset* prefer) {
    Bitset all(g_.vertex_count());
    all.set_all();
    std::array<Vertex, 4> left{};
    return dfs(pool, 0, 0, all, left, prefer);
  }

  std::size_t probes() const noexcept { return probes_; }

 private:
  std::optional<K44Witness> dfs(const std::vector<Vertex>& pool, std::size_t from, std::size_t depth,
                                const Bitset& common, std::array<Vertex, 4>& left, const Bitset* prefer) {
    if (depth == 4) return make_witness(common, left, prefer);
    for (std::size_t i = from; i + (4 - depth) <= pool.size(); ++i) {
      probes_ += g_.vertex_count();
      if (probes_ > budget_) {
        throw SearchBudgetExceeded("k44_budget", budget_,
                                   "K_{4,4} search exceeded its budget of " + std::to_string(budget_) +
                                       " adjacency probes (raise it with --k44-budget)");
      }
      Bitset next = common & g_.row(pool[i]);
      if (next.count() < 4) continue;
      left[depth] = pool[i];
      if (auto w = dfs(pool, i + 1, depth + 1, next, left, prefer)) return w;
    }
    return std::nullopt;
  }

  std::optional<K44Witness> make_witness(const Bitset& common, const std::array<Vertex, 4>& left,
                                         const Bitset* prefer) const {
    const std::size_t n = g_.vertex_count();
    std::vector<Vertex> right;
    if (prefer) {
      Bitset p = common & *prefer;
      for (std::size_t v = p.next(); v < n && right.size() < 4; v = p.next(v + 1)) right.push_back(static_cast<Vertex>(v));
    }
    for (std::size_t v = common.next(); v < n && right.size() < 4; v = common.next(v + 1)) {
      if (std::find(right.begin(), right.end(), v) == right.end()) right.push_back(static_cast<Vertex>(v));
    }
    if (right.size() < 4) return std::nullopt;
    K44Witness w;
    std::array<Elem, 4> l{};
    for (std::size_t i = 0; i < 4; ++i) {
      l[i] = g_.id(left[i]);
      w.right[i] = g_.id(right[i]);
    }
    w.left = l;
    std::sort(w.left.begin(), w.left.end());
    std::sort(w.right.begin(), w.right.end());
    w.probes = probes_;
    return w;
  }

  const NsGraph& g_;
  std::size_t budget_;
  std::size_t probes_ = 0;
};

}  // namespace

std::optional<K44Witness> find_k44(const NsGraph& g, std::size_t budget, std::span<const IndexSet> seed_classes) {
  const std::size_t n = g.vertex_count();
  if (n < 8) return std::nullopt;
  K44Search search(g, budget);

  auto to_local = [&](const IndexSet& ids) {
    std::vector<Vertex> vs;
    for (Elem id : ids) {
      if (auto v = g.vertex_of(id)) vs.push_back(*v);
    }
    return vs;
  };

  if (!seed_classes.empty()) {
    const std::vector<Vertex> first = to_local(seed_classes[0]);
    if (seed_classes.size() > 1) {
      const std::vector<Vertex> second = to_local(seed_classes[1]);
      Bitset prefer(n);
      for (Vertex v : second) prefer.set(v);
      if (auto w = search.run(first, &prefer)) return w;
    }
    if (auto w = search.run(first, nullptr)) return w;
  }

  // Pivoted enumeration over all vertices, highest degree first.
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return search.run(pool, nullptr);
}

bool verify_k44(const NsGraph& g, const K44Witness& w) {
  for (Elem a : w.left) {
    if (std::find(w.right.begin(), w.right.end(), a) != w.right.end()) return false;
    auto u = g.vertex_of(a);
    if (!u) return false;
    for (Elem b : w.right) {
      auto v = g.vertex_of(b);
      if (!v || !g.adjacent(*u, *v)) return false;
    }
  }
  std::array<Elem, 4> l = w.left;
  std::array<Elem, 4> r = w.right;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  return std::adjacent_find(l.begin(), l.end()) == l.end() && std::adjacent_find(r.begin(), r.end()) == r.end();
}

bool is_tree(const NsGraph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

std::optional<std::vector<Elem>> find_odd_cycle(const NsGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, kUnseen);
  std::vector<Vertex> parent(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (depth[root] != kUnseen) continue;
    depth[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const Bitset& r = g.row(u);
      for (std::size_t w = r.next(); w < n; w = r.next(w + 1)) {
        const auto v = static_cast<Vertex>(w);
        if (depth[v] == kUnseen) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (depth[v] % 2 == depth[u] % 2) {
          // Same BFS parity on an edge: the two tree paths close an odd cycle.
          std::vector<Elem> up;
          std::vector<Elem> down;
          Vertex a = u;
          Vertex b = v;
          while (depth[a] > depth[b]) up.push_back(g.id(a)), a = parent[a];
          while (depth[b] > depth[a]) down.push_back(g.id(b)), b = parent[b];
          while (a != b) {
            up.push_back(g.id(a));
            down.push_back(g.id(b));
            a = parent[a];
            b = parent[b];
          }
          up.push_back(g.id(a));
          up.insert(up.end(), down.rbegin(), down.rend());
          return up;
        }
      }
    }
  }
  return std::nullopt;
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "graphml") return ExportFormat::graphml;
  if (name == "json") return ExportFormat::json;
  throw ParseError("unknown graph format '" + name + "' (expected dot, graphml or json)");
}

namespace {

std::string vertex_label(const NsGraph& g, Vertex v) {
  return g.label(v) + "|" + std::to_string(g.element_order(v));
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

template <typename F>
void for_each_edge(const NsGraph& g, F&& f) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    const Bitset& r = g.row(u);
    for (std::size_t v = r.next(u + 1); v < n; v = r.next(v + 1)) f(u, static_cast<Vertex>(v));
  }
}

}  // namespace

void write_dot(const NsGraph& g, std::ostream& os) {
  os << "graph nonsolvable {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << g.id(v) << " [label=\"" << vertex_label(g, v) << "\"];\n";
  }
  for_each_edge(g, [&](Vertex u, Vertex v) { os << "  " << g.id(u) << " -- " << g.id(v) << ";\n"; });
  os << "}\n";
}

void write_graphml(const NsGraph& g, std::ostream& os) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        "  <key id=\"order\" for=\"node\" attr.name=\"order\" attr.type=\"int\"/>\n"
        "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
     << "  <graph id=\"" << to_string(g.mode()) << "\" edgedefault=\"undirected\">\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "    <node id=\"n" << g.id(v) << "\">"
       << "<data key=\"label\">" << xml_escape(g.label(v)) << "</data>"
       << "<data key=\"order\">" << g.element_order(v) << "</data>"
       << "<data key=\"degree\">" << g.degree(v) << "</data></node>\n";
  }
  for_each_edge(g, [&](Vertex u, Vertex v) {
    os << "    <edge source=\"n" << g.id(u) << "\" target=\"n" << g.id(v) << "\"/>\n";
  });
  os << "  </graph>\n</graphml>\n";
}

nlohmann::json to_json(const NsGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"id", g.id(v)}, {"label", g.label(v)}, {"order", g.element_order(v)}, {"degree", g.degree(v)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for_each_edge(g, [&](Vertex u, Vertex v) { edges.push_back({g.id(u), g.id(v)}); });
  return {{"schema_version", 1},
          {"mode", to_string(g.mode())},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"invariants", g.invariants()}};
}

NsGraph graph_from_json(const nlohmann::json& doc) {
  try {
    const std::string mode_name = doc.at("mode").get<std::string>();
    if (mode_name != "full" && mode_name != "induced") throw ParseError("graph JSON: unknown mode " + mode_name);
    std::vector<Elem> ids;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> orders;
    for (const auto& v : doc.at("vertices")) {
      ids.push_back(v.at("id").get<Elem>());
      labels.push_back(v.at("label").get<std::string>());
      orders.push_back(v.at("order").get<std::uint32_t>());
    }
    std::vector<std::pair<Elem, Elem>> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<Elem>(), e.at(1).get<Elem>());
    NsGraph g = NsGraph::from_edges(std::move(ids), edges, mode_name == "full" ? GraphMode::full : GraphMode::induced,
                                    std::move(labels), std::move(orders));
    if (doc.contains("invariants")) g.invariants() = doc.at("invariants");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string export_graph(const NsGraph& g, ExportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ExportFormat::dot: write_dot(g, os); break;
    case ExportFormat::graphml: write_graphml(g, os); break;
    case ExportFormat::json: os << to_json(g).dump(2) << '\n'; break;
  }
  return os.str();
}

void export_graph(const NsGraph& g, ExportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << export_graph(g, format);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace nsg
