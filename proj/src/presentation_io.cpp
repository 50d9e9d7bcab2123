#include "skewpbw/presentation_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "skewpbw/elements.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/parse.hpp"
#include "skewpbw/print.hpp"

namespace skewpbw {

using nlohmann::json;

namespace {

std::string at(const std::string& where, const std::string& what) { return where + ": " + what; }

/// Re-throws a domain error with the field location prepended.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), at(where, e.message()));
  } catch (const json::exception& e) {
    throw Error("SyntaxError", at(where, e.what()));
  }
}

std::string text_of(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw Error("SyntaxError", at(where, "expected a string or an integer"));
}

FieldElement coefficient(const json& v, const Field& field, const std::string& where) {
  return located(where, [&] { return parse_coefficient(text_of(v, where), field); });
}

Field parse_field(const json& f) {
  return located("field", [&] {
    if (!f.is_object()) throw Error("SyntaxError", "expected an object with a \"kind\"");
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Z") return Field::integers();
    if (kind == "Fp") return Field::prime(f.at("p").get<std::uint64_t>());
    if (kind == "Qt") return Field::rational_functions(f.at("params").get<std::vector<std::string>>());
    throw Error("InvalidField", "unknown kind \"" + kind + "\" (expected Q, Z, Fp or Qt)");
  });
}

LowerTerm parse_lower_term(const json& v, const Field& field, std::size_t n, const std::string& where) {
  return located(where, [&] {
    const auto flat = std::make_shared<const Presentation>(trivial_presentation(n, 0, field));
    const Element e = parse_element(text_of(v, where), flat);
    LowerTerm lt;
    lt.constant = field.zero();
    lt.linear.assign(n, field.zero());
    for (const auto& [u, c] : e.terms()) {
      if (u.is_zero()) {
        lt.constant = c;
        continue;
      }
      if (u.total_degree() != 1) throw Error("LowerTermInvalid", "term " + format_monomial(u) + " has degree > 1");
      for (std::size_t k = 0; k < n; ++k) {
        if (u[k] == 1) lt.linear[k] = c;
      }
    }
    return lt;
  });
}

std::pair<std::size_t, std::size_t> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  std::size_t j = 0, i = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t used = 0;
    j = std::stoul(key.substr(0, comma), &used);
    i = std::stoul(key.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error("SyntaxError", "lower_terms key \"" + key + "\" must look like \"j,i\"");
  }
  if (i == 0 || j == 0) throw Error("LowerTermInvalid", "lower_terms[" + key + "]: indices start at 1");
  return {j - 1, i - 1};
}

}  // namespace

PresentationDocument parse_presentation_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error("SyntaxError", e.what());
  }
  if (!doc.is_object()) throw Error("SyntaxError", "a presentation is a JSON object");
  static const std::vector<std::string> known{"n", "r", "field", "q", "sigma", "delta", "lower_terms", "order"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error("SyntaxError", "unknown field \"" + key + "\"");
    }
  }

  Presentation p;
  p.n = located("n", [&] { return doc.at("n").get<std::size_t>(); });
  p.r = doc.contains("r") ? located("r", [&] { return doc.at("r").get<std::size_t>(); }) : 0;
  if (!doc.contains("field")) throw Error("SyntaxError", "missing field \"field\"");
  p.field = parse_field(doc.at("field"));
  const Field& K = p.field;
  const std::size_t n = p.n;

  if (doc.contains("q")) {
    const json& q = doc.at("q");
    if (!q.is_array() || q.size() != n) throw Error("DimensionMismatch", "q: expected " + std::to_string(n) + " rows");
    p.q.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row = "q[" + std::to_string(i + 1) + "]";
      if (!q[i].is_array() || q[i].size() != n) {
        throw Error("DimensionMismatch", row + ": expected " + std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        p.q[i].push_back(coefficient(q[i][j], K, row + "[" + std::to_string(j + 1) + "]"));
      }
    }
  }

  if (doc.contains("sigma")) {
    const json& s = doc.at("sigma");
    if (!s.is_array() || s.size() != n) throw Error("DimensionMismatch", "sigma: expected one entry per generator");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string where = "sigma[" + std::to_string(i + 1) + "]";
      if (s[i].is_null()) {
        p.sigma.emplace_back();
        continue;
      }
      if (!s[i].is_array()) throw Error("SyntaxError", at(where, "expected null or a list of scales"));
      std::vector<Rational> scales;
      for (std::size_t k = 0; k < s[i].size(); ++k) {
        const std::string w = where + "[" + std::to_string(k + 1) + "]";
        const FieldElement c = coefficient(s[i][k], Field::rationals(), w);
        scales.push_back(std::get<Rational>(c.value()));
      }
      p.sigma.push_back(located(where, [&] { return Automorphism(std::move(scales)); }));
    }
  }

  if (doc.contains("delta")) {
    const json& d = doc.at("delta");
    if (!d.is_array() || d.size() != n) throw Error("DimensionMismatch", "delta: expected one entry per generator");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string where = "delta[" + std::to_string(i + 1) + "]";
      if (d[i].is_null()) {
        p.delta.emplace_back();
        continue;
      }
      if (!d[i].is_array()) throw Error("SyntaxError", at(where, "expected null or a list of images"));
      std::vector<FieldElement> images;
      for (std::size_t k = 0; k < d[i].size(); ++k) {
        images.push_back(coefficient(d[i][k], K, where + "[" + std::to_string(k + 1) + "]"));
      }
      p.delta.push_back(located(where, [&] { return Derivation(std::move(images)); }));
    }
  }

  if (doc.contains("lower_terms")) {
    const json& lt = doc.at("lower_terms");
    if (!lt.is_object()) throw Error("SyntaxError", "lower_terms: expected an object keyed by \"j,i\"");
    for (const auto& [key, value] : lt.items()) {
      const auto ji = parse_pair_key(key);
      p.lower_terms[ji] = parse_lower_term(value, K, n, "lower_terms[" + key + "]");
    }
  }

  PresentationDocument out;
  out.presentation = validate(std::move(p));
  if (doc.contains("order")) {
    const json& o = doc.at("order");
    out.order = located("order", [&] {
      if (o.is_string()) return parse_order(o.get<std::string>(), n);
      if (o.is_object() && o.contains("kind")) {
        if (o.at("kind").get<std::string>() != "lex") throw Error("SyntaxError", "only {\"kind\": \"lex\"} is named");
        return MonomialOrder::lex(n);
      }
      const json& rows = o.is_object() ? o.at("matrix") : o;
      std::string text = "[";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        text += r ? ",[" : "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          text += (c ? "," : "") + text_of(rows[r][c], "order");
        }
        text += "]";
      }
      return parse_order(text + "]", n);
    });
  }
  return out;
}

PresentationPtr parse_presentation(std::string_view json_text) {
  return parse_presentation_document(json_text).presentation;
}

PresentationDocument load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation_document(buf.str());
}

std::string serialize_presentation(const Presentation& p) {
  const Field& K = p.field;
  json doc;
  doc["n"] = p.n;
  doc["r"] = p.r;
  json field;
  switch (K.kind()) {
    case FieldKind::Rational:
      field["kind"] = "Q";
      break;
    case FieldKind::Integer:
      field["kind"] = "Z";
      break;
    case FieldKind::PrimeField:
      field["kind"] = "Fp";
      field["p"] = K.characteristic();
      break;
    case FieldKind::RationalFunction:
      field["kind"] = "Qt";
      field["params"] = K.params();
      break;
  }
  doc["field"] = field;
  json q = json::array();
  for (const auto& row : p.q) {
    json r = json::array();
    for (const auto& c : row) r.push_back(K.format(c));
    q.push_back(r);
  }
  doc["q"] = q;
  json sigma = json::array();
  for (const auto& s : p.sigma) {
    if (s.is_identity()) {
      sigma.push_back(nullptr);
      continue;
    }
    json scales = json::array();
    for (const auto& c : s.scales()) scales.push_back(c.get_str());
    sigma.push_back(scales);
  }
  doc["sigma"] = sigma;
  json delta = json::array();
  for (const auto& d : p.delta) {
    if (d.is_zero()) {
      delta.push_back(nullptr);
      continue;
    }
    json images = json::array();
    for (const auto& c : d.coefficients()) images.push_back(K.format(c));
    delta.push_back(images);
  }
  doc["delta"] = delta;
  json lower = json::object();
  const auto flat = std::make_shared<const Presentation>(trivial_presentation(p.n, 0, K));
  for (const auto& [key, lt] : p.lower_terms) {
    Element tail = Element::constant(flat, lt.constant);
    for (std::size_t k = 0; k < p.n; ++k) tail += Element::generator(flat, k).scaled(lt.linear[k]);
    lower[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = format_element(tail);
  }
  doc["lower_terms"] = lower;
  return doc.dump();
}

std::string presentation_hash(const Presentation& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_presentation(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace skewpbw
