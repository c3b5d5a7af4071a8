#include "relkit/partition.hpp"

#include "relkit/error.hpp"

namespace relkit {

bool is_cover(const FinSet& cells, const FinSet& ground) {
  std::size_t total = 0;
  for (const Value& c : cells) {
    if (!c.is_set()) return false;
    if (c.set().empty()) return false;
    if (!c.set().subset_of(ground)) return false;
    total += c.set().size();
  }
  return big_union(cells) == ground && total >= ground.size();
}

bool is_partition(const FinSet& cells, const FinSet& ground) {
  if (!is_cover(cells, ground)) return false;
  // disjoint cells cover each element exactly once
  std::size_t total = 0;
  for (const Value& c : cells) total += c.set().size();
  return total == ground.size();
}

Partition::Partition(FinSet cells, FinSet ground)
    : cells_(std::move(cells)), ground_(std::move(ground)) {
  if (!is_partition(cells_, ground_))
    throw TypeError("not a partition of " + to_string(ground_) + ": " +
                    to_string(cells_));
}

Partition Partition::singletons(const FinSet& ground) {
  std::vector<Value> cells;
  cells.reserve(ground.size());
  for (const Value& x : ground) cells.emplace_back(FinSet({x}));
  return Partition(FinSet(std::move(cells)), ground);
}

Partition Partition::coarsest(const FinSet& ground) {
  if (ground.empty()) return Partition(FinSet(), ground);
  return Partition(FinSet({Value(ground)}), ground);
}

bool operator==(const Partition& a, const Partition& b) {
  return a.ground() == b.ground() && a.cells() == b.cells();
}

bool finer(const Partition& fine, const Partition& coarse) {
  if (fine.ground() != coarse.ground())
    throw TypeError("finer: partitions have different ground sets");
  for (const Value& c1 : fine.cells()) {
    bool inside = false;
    for (const Value& c0 : coarse.cells()) {
      if (c1.set().subset_of(c0.set())) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace relkit
