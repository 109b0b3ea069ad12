#include "sur/types.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "sur/error.hpp"

namespace sur {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kTrivialBicoloring: return "trivial_bicoloring";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kNoGroupFound: return "no_group_found";
    case ErrorCode::kPoolShortfall: return "pool_shortfall";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

// ---- Bicoloring ----

Bicoloring Bicoloring::from_colors(const std::vector<int>& colors) {
  if (colors.empty()) throw Error(ErrorCode::kInvalidArgument, "bicoloring needs n >= 1");
  Bits plus(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == 1) {
      plus.set(i);
    } else if (colors[i] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "color at position " + std::to_string(i + 1) + " is not -1 or +1");
    }
  }
  return Bicoloring(std::move(plus));
}

Bicoloring Bicoloring::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty bicoloring");
  Bits plus(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      plus.set(i);
    } else if (text[i] != '-') {
      throw Error(ErrorCode::kParse, "bicoloring '" + std::string(text) +
                                         "' has a character other than + or -");
    }
  }
  return Bicoloring(std::move(plus));
}

Bicoloring Bicoloring::from_plus_set(std::size_t n, const std::vector<int>& plus) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "bicoloring needs n >= 1");
  Bits bits(n);
  for (int i : plus) {
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    bits.set(static_cast<std::size_t>(i) - 1);
  }
  return Bicoloring(std::move(bits));
}

Bicoloring Bicoloring::from_plus_bits(Bits plus) {
  if (plus.size() == 0) throw Error(ErrorCode::kInvalidArgument, "bicoloring needs n >= 1");
  return Bicoloring(std::move(plus));
}

std::vector<int> Bicoloring::plus_members() const {
  std::vector<int> out;
  for (auto p : plus_.positions()) out.push_back(static_cast<int>(p) + 1);
  return out;
}

std::vector<int> Bicoloring::colors() const {
  std::vector<int> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = plus_.test(i) ? 1 : -1;
  return out;
}

Bicoloring Bicoloring::flipped() const { return Bicoloring(plus_.complement()); }

std::string Bicoloring::to_string() const {
  std::string s(n(), '-');
  for (std::size_t i = 0; i < n(); ++i) {
    if (plus_.test(i)) s[i] = '+';
  }
  return s;
}

// ---- IndexSet ----

IndexSet IndexSet::from_members(std::size_t n, std::vector<int> members) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "index set needs n >= 1");
  Bits bits(n);
  for (int i : members) {
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    }
    if (bits.test(static_cast<std::size_t>(i) - 1)) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate index " + std::to_string(i));
    }
    bits.set(static_cast<std::size_t>(i) - 1);
  }
  std::sort(members.begin(), members.end());
  return IndexSet(std::move(bits), std::move(members));
}

IndexSet IndexSet::from_bits(Bits bits) {
  if (bits.size() == 0) throw Error(ErrorCode::kInvalidArgument, "index set needs n >= 1");
  std::vector<int> members;
  for (auto p : bits.positions()) members.push_back(static_cast<int>(p) + 1);
  return IndexSet(std::move(bits), std::move(members));
}

IndexSet IndexSet::parse(std::size_t n, std::string_view text) {
  std::vector<int> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token(text.substr(pos, comma - pos));
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) {
      if (comma == text.size() && members.empty() && pos == 0) break;
      throw Error(ErrorCode::kParse, "empty index in '" + std::string(text) + "'");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::kParse, "bad index '" + token + "'");
    }
    members.push_back(value);
    pos = comma + 1;
  }
  return from_members(n, std::move(members));
}

std::string IndexSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s;
}

// ---- families ----

BicoloringFamily::BicoloringFamily(std::size_t n_, std::vector<Bicoloring> items_)
    : n(n_), items(std::move(items_)) {
  for (const auto& b : items) {
    if (b.n() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "bicoloring of length " + std::to_string(b.n()) +
                                                     " in a family over n = " + std::to_string(n));
    }
  }
}

void BicoloringFamily::require_nontrivial() const {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].is_trivial()) {
      throw Error(ErrorCode::kTrivialBicoloring, "bicoloring #" + std::to_string(i + 1) + " (" +
                                                     items[i].to_string() +
                                                     ") is trivial and has no representative");
    }
  }
}

bool BicoloringFamily::is_flip_closed() const {
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& b : items) {
    auto w = b.plus_bits().words();
    seen.emplace(w.begin(), w.end());
  }
  for (const auto& b : items) {
    auto f = b.flipped();
    auto w = f.plus_bits().words();
    if (!seen.contains(std::vector<std::uint64_t>(w.begin(), w.end()))) return false;
  }
  return true;
}

SurFamily::SurFamily(std::size_t n_, std::vector<IndexSet> sets_) : n(n_), sets(std::move(sets_)) {
  for (const auto& s : sets) {
    if (s.n() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "set over n = " + std::to_string(s.n()) +
                                                     " in a family over n = " + std::to_string(n));
    }
    if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "family contains an empty set");
  }
}

bool SurFamily::has_exact_shape() const {
  std::set<std::vector<int>> seen;
  for (const auto& s : sets) {
    if (s.size() % 2 != 0) return false;
    if (!seen.insert(s.members()).second) return false;
  }
  return true;
}

void SurFamily::require_exact_shape() const {
  if (!has_exact_shape()) {
    throw Error(ErrorCode::kInvalidArgument, "family has an odd-sized or repeated set");
  }
}

std::size_t Certificate::covered_count() const noexcept {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.has_value() ? 1 : 0;
  return c;
}

std::optional<std::size_t> Certificate::first_uncovered() const noexcept {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i]) return i;
  }
  return std::nullopt;
}

}  // namespace sur
