#pragma once

#include <initializer_list>
#include <vector>

#include "avlrank/tree.hpp"

namespace avlrank::test {

inline Tree from_inserts(std::initializer_list<std::uint64_t> keys,
                         RebalanceCounters* total = nullptr) {
  Tree t;
  for (auto k : keys) {
    OpResult r = t.insert(Key{k});
    if (total) *total += r.counters;
  }
  return t;
}

inline std::vector<Key> keys(std::initializer_list<std::uint64_t> ks) {
  std::vector<Key> out;
  for (auto k : ks) out.push_back(Key{k});
  return out;
}

// The rank-2 type-L member with keys 1..4.
inline constexpr const char* kRank2L = "(3;2 (2;1 (1;0 - -) -) (4;0 - -))";
inline constexpr const char* kRank2R = "(2;2 (1;0 - -) (3;1 - (4;0 - -)))";

}  // namespace avlrank::test
