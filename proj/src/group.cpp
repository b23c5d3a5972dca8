#include "nsg/group.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nsg/errors.hpp"

namespace nsg {

FiniteGroup FiniteGroup::generate(std::span<const Permutation> generators, std::size_t degree,
                                  const GroupOptions& options) {
  if (degree == 0) throw PreconditionError("generate: degree must be at least 1");
  for (const auto& s : generators) {
    if (s.degree() != degree) {
      throw PreconditionError("generate: generator " + s.to_cycle_string() + " has degree " +
                              std::to_string(s.degree()) + ", expected " + std::to_string(degree));
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.generators_.assign(generators.begin(), generators.end());

  // Distinct non-identity generators drive the breadth-first sweep.
  std::vector<Permutation> steps;
  for (const auto& s : generators) {
    if (!s.is_identity() && std::find(steps.begin(), steps.end(), s) == steps.end()) steps.push_back(s);
  }

  // parent[e] * steps[step_of[e]] == e, with parent[e] < e.
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> step_of{0};
  std::vector<Elem> right;  // right[e * k + j] = e * steps[j]

  g.elements_.emplace_back(degree);
  g.index_.emplace(g.elements_.back(), 0);
  const std::size_t k = steps.size();

  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation next = compose(g.elements_[head], steps[j]);
      auto [it, inserted] = g.index_.try_emplace(next, static_cast<Elem>(g.elements_.size()));
      if (inserted) {
        if (g.elements_.size() >= options.order_guard) {
          throw ResourceLimitError("order_guard", options.order_guard,
                                   "group order exceeds order_guard = " +
                                       std::to_string(options.order_guard) +
                                       " (raise it with --guard)");
        }
        g.elements_.push_back(std::move(next));
        parent.push_back(static_cast<Elem>(head));
        step_of.push_back(static_cast<std::uint32_t>(j));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = g.elements_.size();
  g.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = &g.table_[a * n];
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[std::size_t{row[parent[b]]} * k + step_of[b]];
  }

  for (const auto& s : generators) g.generator_indices_.push_back(g.index_.at(s));
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table, std::size_t order,
                                    std::span<const Elem> generator_indices) {
  if (order == 0 || table.size() != order * order) {
    throw PreconditionError("from_table: table size does not match order");
  }
  for (std::size_t k = 0; k < order; ++k) {
    if (table[k] != k || table[k * order] != k) {
      throw PreconditionError("from_table: index 0 is not the identity");
    }
  }

  FiniteGroup g;
  g.degree_ = order;
  g.elements_.reserve(order);
  for (std::size_t k = 0; k < order; ++k) {
    std::vector<Point> images(order);
    for (std::size_t i = 0; i < order; ++i) images[i] = table[i * order + k];
    g.elements_.push_back(Permutation::from_images(std::move(images)));
    g.index_.emplace(g.elements_.back(), static_cast<Elem>(k));
  }
  if (g.index_.size() != order) throw PreconditionError("from_table: rows are not distinct");
  g.table_ = std::move(table);
  for (Elem e : generator_indices) {
    if (e >= order) throw PreconditionError("from_table: generator index out of range");
    g.generators_.push_back(g.elements_[e]);
    g.generator_indices_.push_back(e);
  }
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  std::erase(generator_indices_, Elem{0});
  std::sort(generator_indices_.begin(), generator_indices_.end());
  generator_indices_.erase(std::unique(generator_indices_.begin(), generator_indices_.end()),
                           generator_indices_.end());

  const std::size_t n = order();
  orders_.assign(n, 0);
  inverse_.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    std::uint32_t k = 1;
    Elem prev = 0;
    Elem p = x;
    while (p != 0) {
      prev = p;
      p = mul(p, x);
      ++k;
    }
    orders_[x] = k;
    inverse_[x] = x == 0 ? 0 : prev;
  }
}

bool FiniteGroup::find(const Permutation& p, Elem& out) const {
  auto it = index_.find(p);
  if (it == index_.end()) return false;
  out = it->second;
  return true;
}

Elem FiniteGroup::index_of(const Permutation& p) const {
  Elem e = 0;
  if (!find(p, e)) throw PreconditionError("index_of: " + p.to_cycle_string() + " is not in the group");
  return e;
}

Elem FiniteGroup::power(Elem x, std::uint64_t k) const noexcept {
  k %= orders_[x];
  Elem out = 0;
  for (std::uint64_t i = 0; i < k; ++i) out = mul(out, x);
  return out;
}

IndexSet FiniteGroup::cyclic_subgroup(Elem x) const {
  IndexSet out{0};
  for (Elem p = x; p != 0; p = mul(p, x)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem a : generator_indices_) {
    for (Elem b : generator_indices_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  ConjugacyClasses out;
  out.class_of.assign(n, kUnassigned);
  out.conjugator.assign(n, 0);

  for (Elem start = 0; start < n; ++start) {
    if (out.class_of[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    IndexSet members{start};
    out.class_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Elem y = members[head];
      for (Elem s : g.generator_indices()) {
        const Elem z = g.conjugate(y, s);
        if (out.class_of[z] != kUnassigned) continue;
        out.class_of[z] = id;
        out.conjugator[z] = g.mul(s, out.conjugator[y]);
        members.push_back(z);
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  return out;
}

IndexSet centralizer(const FiniteGroup& g, Elem x) {
  IndexSet out;
  for (Elem h = 0; h < g.order(); ++h) {
    if (g.mul(h, x) == g.mul(x, h)) out.push_back(h);
  }
  return out;
}

IndexSet normalizer_of_cyclic(const FiniteGroup& g, Elem x) {
  std::vector<bool> in_cyclic(g.order(), false);
  for (Elem c : g.cyclic_subgroup(x)) in_cyclic[c] = true;
  IndexSet out;
  for (Elem h = 0; h < g.order(); ++h) {
    if (in_cyclic[g.conjugate(x, h)]) out.push_back(h);
  }
  return out;
}

ElementInfo element_info(const FiniteGroup& g, const ConjugacyClasses& classes, Elem x) {
  ElementInfo info;
  info.index = x;
  info.order = g.element_order(x);
  info.centralizer_size = centralizer(g, x).size();
  info.class_id = classes.class_of[x];
  info.cyclic_subgroup = g.cyclic_subgroup(x);
  return info;
}

GeneratorFile parse_generator_file(std::string_view contents) {
  GeneratorFile out;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(contents)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);

    if (!have_degree) {
      std::istringstream words(line);
      std::string keyword;
      long long degree = 0;
      std::string rest;
      if (!(words >> keyword >> degree) || keyword != "degree" || degree < 1 || (words >> rest)) {
        throw ParseError("generator file line " + std::to_string(line_no) +
                         ": expected 'degree N' with N >= 1");
      }
      out.degree = static_cast<std::size_t>(degree);
      have_degree = true;
      continue;
    }
    try {
      out.generators.push_back(parse_permutation(line, out.degree));
    } catch (const ParseError& e) {
      throw ParseError("generator file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) throw ParseError("generator file: missing 'degree N' line");
  return out;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read generator file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_file(buf.str());
}

std::string format_generator_file(const GeneratorFile& file) {
  std::ostringstream os;
  os << "degree " << file.degree << '\n';
  for (const auto& s : file.generators) os << s.to_cycle_string() << '\n';
  return os.str();
}

}  // namespace nsg
