#include "sur/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sur/error.hpp"

namespace sur::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Non-blank, non-comment lines.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    pos = end + 1;
  }
  return out;
}

std::size_t parse_n(std::string_view line) {
  std::size_t n = 0;
  for (char c : line) {
    if (c < '0' || c > '9') throw Error(ErrorCode::kParse, "first line must be n, got '" + std::string(line) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (n == 0) throw Error(ErrorCode::kParse, "n must be positive");
  return n;
}

}  // namespace

BicoloringFamily parse_bicolorings(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "bicoloring file is empty");
  const std::size_t n = parse_n(lines.front());
  std::vector<Bicoloring> items;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != n) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(i + 1) + " has length " +
                                         std::to_string(lines[i].size()) + ", expected " +
                                         std::to_string(n));
    }
    items.push_back(Bicoloring::parse(lines[i]));
  }
  BicoloringFamily family(n, std::move(items));
  family.require_nontrivial();
  return family;
}

std::string format_bicolorings(const BicoloringFamily& family) {
  std::string out = std::to_string(family.n) + "\n";
  for (const auto& b : family.items) out += b.to_string() + "\n";
  return out;
}

SurFamily parse_family_text(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "family file is empty");
  const std::size_t n = parse_n(lines.front());
  std::vector<IndexSet> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) sets.push_back(IndexSet::parse(n, lines[i]));
  return SurFamily(n, std::move(sets));
}

std::string format_family_text(const SurFamily& family) {
  std::string out = std::to_string(family.n) + "\n";
  for (const auto& s : family.sets) out += s.to_string() + "\n";
  return out;
}

json to_json(const Bicoloring& b) { return json{{"n", b.n()}, {"colors", b.colors()}}; }

json to_json(const IndexSet& a) { return json{{"n", a.n()}, {"members", a.members()}}; }

json to_json(const SurFamily& family) {
  json sets = json::array();
  for (const auto& s : family.sets) sets.push_back(to_json(s));
  return json{{"n", family.n}, {"sets", std::move(sets)}};
}

json to_json(const BicoloringFamily& family) {
  json items = json::array();
  for (const auto& b : family.items) items.push_back(to_json(b));
  return json{{"n", family.n}, {"bicolorings", std::move(items)}};
}

json to_json(const Certificate& cert) {
  json entries = json::array();
  for (const auto& e : cert.entries) {
    if (e) {
      entries.push_back(json{{"witness", e->set_index}, {"value", e->value}});
    } else {
      entries.push_back("UNCOVERED");
    }
  }
  return json{{"delta", cert.delta},
              {"covered", cert.covered_count()},
              {"uncovered", cert.uncovered_count()},
              {"entries", std::move(entries)}};
}

Bicoloring bicoloring_from_json(const json& j) {
  try {
    auto b = Bicoloring::from_colors(j.at("colors").get<std::vector<int>>());
    if (b.n() != j.at("n").get<std::size_t>()) {
      throw Error(ErrorCode::kParse, "bicoloring record: n disagrees with colors");
    }
    return b;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad bicoloring record: ") + e.what());
  }
}

IndexSet index_set_from_json(const json& j) {
  try {
    return IndexSet::from_members(j.at("n").get<std::size_t>(),
                                  j.at("members").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad index set record: ") + e.what());
  }
}

SurFamily family_from_json(const json& j) {
  try {
    std::vector<IndexSet> sets;
    for (const auto& s : j.at("sets")) sets.push_back(index_set_from_json(s));
    return SurFamily(j.at("n").get<std::size_t>(), std::move(sets));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad family record: ") + e.what());
  }
}

SurFamily parse_family(std::string_view text) {
  auto body = trim(text);
  if (body.empty()) throw Error(ErrorCode::kParse, "family file is empty");
  if (body.front() != '{') return parse_family_text(body);
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("outputs") && j["outputs"].contains("family")) return family_from_json(j["outputs"]["family"]);
  if (j.contains("family")) return family_from_json(j["family"]);
  return family_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sur::io
