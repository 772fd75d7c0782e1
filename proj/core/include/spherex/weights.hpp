#pragma once

#include <map>
#include <utility>

#include "spherex/linalg.hpp"

namespace spherex {

// Multiset of (degree, torus weight) pairs. Entries with multiplicity zero
// are never stored.
struct GradedWeightMultiset {
  std::map<std::pair<int, IntVec>, Int> entries;

  void add(const IntVec& weight, int degree, Int mult = 1) {
    if (mult == 0) return;
    auto key = std::make_pair(degree, weight);
    Int& m = entries[key];
    m += mult;
    if (m == 0) entries.erase(key);
  }
  GradedWeightMultiset& operator+=(const GradedWeightMultiset& o) {
    for (const auto& [k, m] : o.entries) add(k.second, k.first, m);
    return *this;
  }
  bool empty() const { return entries.empty(); }
  Int total() const {
    Int t = 0;
    for (const auto& kv : entries) t += kv.second;
    return t;
  }
  GradedWeightMultiset in_degree(int d) const {
    GradedWeightMultiset out;
    for (const auto& [k, m] : entries)
      if (k.first == d) out.add(k.second, d, m);
    return out;
  }
  bool operator==(const GradedWeightMultiset&) const = default;
};

}  // namespace spherex
