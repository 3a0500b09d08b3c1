#include "posetprune/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "posetprune/irreducibles.hpp"

namespace posetprune {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_label(std::string_view s) {
  return !s.empty() && s.find_first_of(" \t\r<#") == std::string_view::npos;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PosetDocument parse_text(std::string_view input) {
  PosetDocument doc;
  std::set<std::string> seen;
  auto declare = [&](std::string_view label) {
    if (seen.emplace(label).second) doc.elements.emplace_back(label);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    auto end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (trim(line.substr(0, hash)).empty() && comment.starts_with("name:"))
        doc.name = std::string(trim(comment.substr(5)));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto lt = line.find('<');
    if (lt == std::string_view::npos) {
      if (!valid_label(line)) throw ParseError(line_no, "malformed element '" + std::string(line) + "'");
      declare(line);
      continue;
    }
    if (line.find('<', lt + 1) != std::string_view::npos)
      throw ParseError(line_no, "one relation per line");
    auto lhs = trim(line.substr(0, lt));
    auto rhs = trim(line.substr(lt + 1));
    if (!valid_label(lhs) || !valid_label(rhs))
      throw ParseError(line_no, "expected 'A < B'");
    declare(lhs);
    declare(rhs);
    doc.covers.emplace_back(std::string(lhs), std::string(rhs));
  }
  return doc;
}

Poset to_poset(const PosetDocument& doc) {
  return Poset::from_relations(doc.elements, doc.covers);
}

PosetDocument to_document(const Poset& p, std::optional<std::string> name) {
  PosetDocument doc;
  doc.elements = p.labels();
  for (const auto& [x, y] : p.cover_pairs()) doc.covers.emplace_back(p.label(x), p.label(y));
  doc.name = std::move(name);
  return doc;
}

PosetDocument canonical(const PosetDocument& doc) {
  return to_document(to_poset(doc), doc.name);
}

std::string emit_text(const Poset& p, const std::optional<std::string>& name) {
  std::ostringstream out;
  if (name) out << "# name: " << *name << '\n';
  for (Element x = 0; x < p.size(); ++x)
    if (p.upper_covers(x).empty() && p.lower_covers(x).empty()) out << p.label(x) << '\n';
  for (const auto& [x, y] : p.cover_pairs()) out << p.label(x) << " < " << p.label(y) << '\n';
  return out.str();
}

PosetDocument parse_json(std::string_view input) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "top level must be an object");
  if (!j.contains("elements") || !j["elements"].is_array())
    throw ParseError(0, "'elements' must be an array of strings");
  if (!j.contains("covers") || !j["covers"].is_array())
    throw ParseError(0, "'covers' must be an array of pairs");

  PosetDocument doc;
  std::set<std::string> declared;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError(0, "element labels must be strings");
    doc.elements.push_back(e.get<std::string>());
    declared.insert(doc.elements.back());
  }
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw ParseError(0, "each cover must be a pair of strings");
    auto a = c[0].get<std::string>();
    auto b = c[1].get<std::string>();
    for (const auto& l : {a, b})
      if (!declared.contains(l)) throw ParseError(0, "cover references unknown label '" + l + "'");
    doc.covers.emplace_back(std::move(a), std::move(b));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(0, "'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

std::string emit_json(const PosetDocument& doc) {
  auto elements = doc.elements;
  auto covers = doc.covers;
  std::sort(elements.begin(), elements.end());
  std::sort(covers.begin(), covers.end());

  nlohmann::ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  j["elements"] = elements;
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : covers) j["covers"].push_back({a, b});
  return j.dump(2) + "\n";
}

Poset read_poset(std::string_view input) {
  auto first = input.find_first_not_of(" \t\r\n");
  // text labels may start with '{' too, e.g. "{} < {1}"
  if (first != std::string_view::npos && input[first] == '{' && nlohmann::json::accept(input))
    return to_poset(parse_json(input));
  return to_poset(parse_text(input));
}

std::string emit_dot(const Poset& p, const DotStyle& style) {
  const auto irr = irreducibles(p);
  const auto co = coirreducibles(p);
  const auto height = p.heights();

  std::ostringstream out;
  out << "digraph " << dot_quote(style.graph_name.value_or("poset")) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<std::string> attrs;
    if (style.mark_irreducible && irr.contains(x))
      attrs.emplace_back("style=filled, fillcolor=black, fontcolor=white");
    if (style.mark_coirreducible && co.contains(x)) attrs.emplace_back("peripheries=2");
    out << "  " << dot_quote(p.label(x));
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }

  std::map<std::size_t, std::vector<Element>> ranks;
  for (Element x = 0; x < p.size(); ++x) ranks[height[x]].push_back(x);
  for (const auto& [h, members] : ranks) {
    out << "  { rank=same;";
    for (Element x : members) out << ' ' << dot_quote(p.label(x)) << ';';
    out << " }\n";
  }

  for (const auto& [x, y] : p.cover_pairs())
    out << "  " << dot_quote(p.label(x)) << " -> " << dot_quote(p.label(y)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posetprune
