#pragma once

#include <cstdint>
#include <map>

#include "vantage/geometry.hpp"

namespace vantage {

/// A set of distinct orderings, each with one witnessing parameter. When the same ordering is found
/// twice, the witness with the smaller discovery index is kept, so merging is order-independent.
template <class Key, class Witness>
struct Catalog {
  struct Entry {
    Witness witness;
    std::uint64_t found_at = 0;
  };

  std::map<Key, Entry> entries;
  std::uint64_t trials = 0;
  std::uint64_t ties_skipped = 0;
  std::uint64_t indeterminate = 0;

  std::size_t size() const noexcept { return entries.size(); }
  bool contains(const Key& key) const { return entries.count(key) != 0; }

  /// Returns true when the key was new.
  bool insert(const Key& key, const Witness& witness, std::uint64_t found_at = 0) {
    auto [it, inserted] = entries.try_emplace(key, Entry{witness, found_at});
    if (!inserted && found_at < it->second.found_at) it->second = Entry{witness, found_at};
    return inserted;
  }

  void merge(const Catalog& other) {
    for (const auto& [key, entry] : other.entries) insert(key, entry.witness, entry.found_at);
    trials += other.trials;
    ties_skipped += other.ties_skipped;
    indeterminate += other.indeterminate;
  }
};

using OrderingCatalog = Catalog<Ordering, VantageMultiset>;

}  // namespace vantage
