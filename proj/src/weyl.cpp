#include "eorb/weyl.hpp"

#include <algorithm>
#include <deque>

namespace eorb::weyl {

GroupCapExceeded::GroupCapExceeded(std::size_t cap, std::size_t partial)
    : Error("group exceeds the element cap of " + std::to_string(cap) + " (" +
            std::to_string(partial) + " elements generated so far)"),
      partial_(partial) {}

MatrixGroup::MatrixGroup(std::vector<IntegerMatrix> elements,
                         std::vector<std::size_t> generator_indices)
    : elements_(std::move(elements)), generator_indices_(std::move(generator_indices)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> MatrixGroup::index_of(const IntegerMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MatrixGroup generate_group(std::span<const IntegerMatrix> generators, std::size_t cap,
                           std::size_t dimension) {
  if (cap == 0) throw Error("generate_group: cap must be at least 1");
  std::vector<IntegerMatrix> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const std::size_t n = gens.empty() ? dimension : gens[0].rows();
  for (const auto& g : gens)
    if (!g.is_square() || g.rows() != n)
      throw Error("generate_group: generators have inconsistent shapes");
  for (const auto& g : gens)
    if (!is_unimodular(g)) throw Error("generate_group: generator is not unimodular " + to_string(g));

  std::vector<IntegerMatrix> elements{IntegerMatrix::identity(n)};
  std::unordered_map<IntegerMatrix, std::size_t, MatrixHash> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      IntegerMatrix next = g * elements[head];
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) throw GroupCapExceeded(cap, elements.size());
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  std::vector<std::size_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(seen.at(g));
  return MatrixGroup(std::move(elements), std::move(gen_idx));
}

ConjugacyClassTable conjugacy_classes(const MatrixGroup& group) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  ConjugacyClassTable table;
  table.class_of.assign(group.size(), unassigned);

  std::vector<std::pair<IntegerMatrix, IntegerMatrix>> conjugators;
  for (std::size_t gi : group.generator_indices()) {
    const auto& g = group.element(gi);
    conjugators.emplace_back(g, unimodular_inverse(g));
  }

  for (std::size_t start = 0; start < group.size(); ++start) {
    if (table.class_of[start] != unassigned) continue;
    const std::size_t cls = table.classes.size();
    std::deque<std::size_t> queue{start};
    table.class_of[start] = cls;
    std::size_t size = 0;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& [g, g_inv] : conjugators) {
        const auto y = group.index_of(g * group.element(x) * g_inv);
        if (!y) throw Error("conjugacy_classes: group is not closed under conjugation");
        if (table.class_of[*y] == unassigned) {
          table.class_of[*y] = cls;
          queue.push_back(*y);
        }
      }
    }
    table.classes.push_back({start, size});
  }
  return table;
}

MatrixGroup centralizer(const MatrixGroup& group, const IntegerMatrix& w) {
  if (!group.contains(w)) throw Error("centralizer: element is not in the group " + to_string(w));
  std::vector<IntegerMatrix> members;
  for (const auto& c : group.elements())
    if (c * w == w * c) members.push_back(c);
  return MatrixGroup(std::move(members), {});
}

}  // namespace eorb::weyl
