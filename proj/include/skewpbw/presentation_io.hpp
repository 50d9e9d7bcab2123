#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "skewpbw/exponents.hpp"
#include "skewpbw/presentation.hpp"

namespace skewpbw {

struct PresentationDocument {
  PresentationPtr presentation;
  /// Optional "order" entry of the document.
  std::optional<MonomialOrder> order;
};

/// JSON document
///   {"n": 2, "r": 0,
///    "field": {"kind": "Q" | "Z" | "Fp" | "Qt", "p": 7, "params": ["t1"]},
///    "q": [["1", "q"], ["q^-1", "1"]],
///    "sigma": [null, ["2"]],          scale of each parameter
///    "delta": [["1"], null],          image of each parameter
///    "lower_terms": {"2,1": "1 + x1"},
///    "order": "lex" | {"kind": "lex"} | {"matrix": [["1", "1/2"], [0, 1]]}}
/// Everything but n and field is optional. Errors name the offending field
/// (e.g. "q[2][1]") and pass validation errors through.
PresentationDocument parse_presentation_document(std::string_view json_text);
PresentationPtr parse_presentation(std::string_view json_text);
/// Reads a file; throws IOError.
PresentationDocument load_presentation(const std::string& path);

/// Canonical compact JSON (sorted keys, coefficients as strings).
std::string serialize_presentation(const Presentation& p);
/// FNV-1a 64 of the canonical JSON, 16 hex digits.
std::string presentation_hash(const Presentation& p);

}  // namespace skewpbw
