#include "sur/hitting.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sur/error.hpp"

namespace sur {

bool HittingInstance::is_complement_closed() const {
  std::set<std::vector<int>> present;
  for (const auto& s : sets) present.insert(s.members());
  for (const auto& s : sets) {
    auto comp = IndexSet::from_bits(s.bits().complement());
    if (!present.contains(comp.members())) return false;
  }
  return true;
}

bool HittingSet::hits(const IndexSet& s) const {
  return std::any_of(elements.begin(), elements.end(), [&](int e) { return s.contains(e); });
}

bool HittingSet::hits_all(const HittingInstance& instance) const {
  return std::all_of(instance.sets.begin(), instance.sets.end(),
                     [&](const IndexSet& s) { return hits(s); });
}

HittingInstance bicolorings_to_setfamily(const BicoloringFamily& family) {
  family.require_nontrivial();
  HittingInstance inst;
  inst.n = family.n;
  inst.sets.reserve(2 * family.size());
  for (const auto& b : family.items) {
    inst.sets.push_back(IndexSet::from_bits(b.plus_bits()));
    inst.sets.push_back(IndexSet::from_bits(b.plus_bits().complement()));
  }
  return inst;
}

HittingSet greedy_hitting_set(const HittingInstance& instance) {
  for (std::size_t i = 0; i < instance.sets.size(); ++i) {
    if (instance.sets[i].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "set #" + std::to_string(i + 1) + " is empty and cannot be hit");
    }
  }
  std::vector<bool> hit(instance.sets.size(), false);
  std::size_t remaining = instance.sets.size();
  HittingSet h;
  while (remaining > 0) {
    int best = 0;
    std::size_t best_count = 0;
    for (std::size_t e = 1; e <= instance.n; ++e) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < instance.sets.size(); ++i) {
        if (!hit[i] && instance.sets[i].contains(static_cast<int>(e))) ++c;
      }
      if (c > best_count) {
        best_count = c;
        best = static_cast<int>(e);
      }
    }
    h.elements.push_back(best);
    for (std::size_t i = 0; i < instance.sets.size(); ++i) {
      if (!hit[i] && instance.sets[i].contains(best)) {
        hit[i] = true;
        --remaining;
      }
    }
  }
  return h;
}

SurFamily sur_from_hitting_set(const HittingSet& h, std::size_t n) {
  if (h.elements.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "hitting set has fewer than two elements, so it cannot hit both sides of a "
                "nontrivial bicoloring");
  }
  std::vector<IndexSet> sets;
  for (std::size_t q = 1; q < h.elements.size(); ++q) {
    sets.push_back(IndexSet::from_members(n, {h.elements[0], h.elements[q]}));
  }
  return SurFamily(n, std::move(sets));
}

HittingInstance complement_close(const std::vector<IndexSet>& sets, std::size_t n) {
  HittingInstance out;
  out.n = n + 1;
  std::vector<IndexSet> complements;
  for (const auto& s : sets) {
    if (s.n() != n) throw Error(ErrorCode::kDimensionMismatch, "set is over a different n");
    if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "complement closure needs non-empty sets");
    Bits lifted(n + 1);
    for (int m : s.members()) lifted.set(static_cast<std::size_t>(m) - 1);
    complements.push_back(IndexSet::from_bits(lifted.complement()));
    out.sets.push_back(IndexSet::from_bits(std::move(lifted)));
  }
  for (auto& c : complements) out.sets.push_back(std::move(c));
  return out;
}

}  // namespace sur
