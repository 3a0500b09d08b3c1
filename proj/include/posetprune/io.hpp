#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetprune/poset.hpp"

namespace posetprune {

/// A poset as written in a file: labels plus relations. Relations need not
/// be covers; canonical emission always writes covers only.
struct PosetDocument {
  std::vector<std::string> elements;
  std::vector<LabelPair> covers;
  std::optional<std::string> name;

  bool operator==(const PosetDocument&) const = default;
};

/// Text format, one item per line:
///
///     # comment           (anywhere; `# name: X` on its own line names the poset)
///     a < b               relation, labels declared implicitly
///     c                   isolated element
///
/// Labels are runs of characters other than whitespace, `<` and `#`.
/// Throws ParseError with the offending line number.
PosetDocument parse_text(std::string_view input);

/// Element list sorted, covers of the validated poset only, sorted. Throws
/// whatever Poset::from_relations throws.
PosetDocument canonical(const PosetDocument& doc);

Poset to_poset(const PosetDocument& doc);
PosetDocument to_document(const Poset& p, std::optional<std::string> name = std::nullopt);

/// Canonical text: optional name line, isolated elements, then `x < y` for
/// each cover, everything in label order.
std::string emit_text(const Poset& p, const std::optional<std::string>& name = std::nullopt);

/// {"name"?: string, "elements": [string], "covers": [[string, string]]}.
/// Relations naming undeclared labels are a ParseError.
PosetDocument parse_json(std::string_view input);

/// Keys in the order name, elements, covers; arrays sorted. Emits the
/// document as given, so pass it through canonical() for normal form.
std::string emit_json(const PosetDocument& doc);

/// Reads JSON when the input starts with '{' and is well-formed JSON,
/// text otherwise.
Poset read_poset(std::string_view input);

struct DotStyle {
  bool mark_irreducible = true;    ///< filled black
  bool mark_coirreducible = true;  ///< double ring
  std::optional<std::string> graph_name;
};

/// Hasse diagram, bottom to top, one rank per longest-path height. Output is
/// a pure function of the poset and style.
std::string emit_dot(const Poset& p, const DotStyle& style = {});

}  // namespace posetprune
