#include "skewpbw/print.hpp"

#include <algorithm>

namespace skewpbw {

namespace {

using TermRef = std::pair<const ExponentVector*, const FieldElement*>;

std::string join_terms(const std::vector<TermRef>& terms, const Field& field) {
  if (terms.empty()) return "0";
  const bool lone = terms.size() == 1;
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const ExponentVector& u = *terms[k].first;
    FieldElement c = *terms[k].second;
    const bool negative = field.is_negative(c);
    if (negative) c = -c;
    std::string coef = field.format(c);
    if (field.needs_parens(c) && !(lone && u.is_zero() && !negative)) coef = "(" + coef + ")";
    std::string body;
    if (u.is_zero()) {
      body = coef;
    } else if (c.is_one()) {
      body = format_monomial(u);
    } else {
      body = coef + "*" + format_monomial(u);
    }
    if (k == 0) {
      out = (negative ? "-" : "") + body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace

std::string format_monomial(const ExponentVector& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (u[i] != 1) s += "^" + u[i].get_str();
  }
  return s.empty() ? "1" : s;
}

std::string format_element(const Element& f, const std::optional<MonomialOrder>& order) {
  const MonomialOrder ord = order ? *order : MonomialOrder::lex(f.presentation()->n);
  std::vector<TermRef> terms;
  for (const auto& [u, c] : f.terms()) terms.emplace_back(&u, &c);
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const TermRef& a, const TermRef& b) { return ord.less(*b.first, *a.first); });
  return join_terms(terms, f.presentation()->field);
}

std::string format_series(const HahnSeries& f) {
  std::vector<TermRef> terms;
  for (const auto& [u, c] : f.terms()) terms.emplace_back(&u, &c);
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const TermRef& a, const TermRef& b) { return f.order().less(*a.first, *b.first); });
  std::string out = join_terms(terms, f.presentation()->field);
  if (f.bound()) {
    out = terms.empty() ? "O(>= " + f.bound()->to_string() + ")" : out + " + O(>= " + f.bound()->to_string() + ")";
  }
  return out;
}

}  // namespace skewpbw
