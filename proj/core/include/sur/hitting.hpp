#pragma once

#include <cstddef>
#include <vector>

#include "sur/types.hpp"

namespace sur {

struct HittingInstance {
  std::size_t n = 0;
  std::vector<IndexSet> sets;

  bool is_complement_closed() const;
};

// Elements in pick order.
struct HittingSet {
  std::vector<int> elements;

  bool hits(const IndexSet& s) const;
  bool hits_all(const HittingInstance& instance) const;
};

// Sets B_0(+1), B_0(-1), B_1(+1), B_1(-1), ...
HittingInstance bicolorings_to_setfamily(const BicoloringFamily& family);

// Repeatedly picks the element hitting the most un-hit sets, ties to the
// smallest index.
HittingSet greedy_hitting_set(const HittingInstance& instance);

// Pairs {h_1, h_q} for q > 1. When H hits both sides of every bicoloring,
// the result represents all of them.
SurFamily sur_from_hitting_set(const HittingSet& h, std::size_t n);

// Adds element n+1 and the [n+1]-complement of every input set.
HittingInstance complement_close(const std::vector<IndexSet>& sets, std::size_t n);

}  // namespace sur
