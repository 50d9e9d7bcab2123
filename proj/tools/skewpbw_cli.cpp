#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "skewpbw/completion.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/parse.hpp"
#include "skewpbw/presentation_io.hpp"
#include "skewpbw/print.hpp"
#include "skewpbw/valuation.hpp"

using namespace skewpbw;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string presentation;
  std::vector<std::string> exprs;
  std::string order;
  std::string order2;
  std::string tau;
  std::string bound;
  std::size_t power = 1;
  std::size_t depth = 100;
  std::size_t max_terms = 64;
};

struct Output {
  PresentationPtr presentation;
  json input = json::object();
  json result = json::object();
  json diagnostics = json::array();
  std::ostringstream text;
};

struct Session {
  PresentationPtr presentation;
  std::optional<MonomialOrder> document_order;
};

Session load(const Options& o) {
  if (o.presentation.empty()) throw Error("Usage", "this command needs -p <presentation.json>");
  const PresentationDocument doc = load_presentation(o.presentation);
  return {doc.presentation, doc.order};
}

/// --order, then the document, then SKEWPBW_ORDER, then lex.
MonomialOrder active_order(const Options& o, const Session& s) {
  const std::size_t n = s.presentation->n;
  if (!o.order.empty()) return parse_order(o.order, n);
  if (s.document_order) return *s.document_order;
  if (const char* env = std::getenv("SKEWPBW_ORDER"); env && *env) return parse_order(env, n);
  return MonomialOrder::lex(n);
}

Element single_expr(const Options& o, const Session& s) {
  if (o.exprs.size() != 1) throw Error("Usage", "this command takes exactly one -e <expression>");
  return parse_element(o.exprs[0], s.presentation);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string field_summary(const Presentation& p) { return p.field.kind_name(); }

void describe(Output& out, const Presentation& p) {
  out.result["n"] = p.n;
  out.result["r"] = p.r;
  out.result["field"] = field_summary(p);
  out.result["quasi_commutative"] = p.flags.quasi_commutative;
  out.result["bijective"] = p.flags.bijective;
  out.text << "n = " << p.n << ", r = " << p.r << ", field = " << field_summary(p) << "\n"
           << "quasi_commutative: " << yes_no(p.flags.quasi_commutative) << "\n"
           << "bijective: " << yes_no(p.flags.bijective) << "\n";
}

void cmd_validate(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  out.result["valid"] = true;
  out.text << "valid\n";
  describe(out, *s.presentation);
}

void cmd_normalize(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const MonomialOrder order = active_order(o, s);
  if (o.exprs.empty()) throw Error("Usage", "normalize needs at least one -e <expression>");
  json results = json::array();
  for (const auto& e : o.exprs) {
    const std::string f = format_element(parse_element(e, s.presentation), order);
    results.push_back(f);
    out.text << f << "\n";
  }
  out.input["expressions"] = o.exprs;
  out.result["normal_forms"] = results;
}

void cmd_mul(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  if (o.exprs.size() < 2) throw Error("Usage", "mul needs two or more -e <expression>");
  Element product = parse_element(o.exprs[0], s.presentation);
  for (std::size_t k = 1; k < o.exprs.size(); ++k) product = product * parse_element(o.exprs[k], s.presentation);
  const std::string f = format_element(product, active_order(o, s));
  out.input["factors"] = o.exprs;
  out.result["product"] = f;
  out.text << f << "\n";
}

void cmd_val(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const MonomialOrder order = active_order(o, s);
  const Value v = val(single_expr(o, s), order);
  out.input["expression"] = o.exprs[0];
  out.input["order"] = order.to_string();
  out.result["valuation"] = v.to_string();
  out.text << "v = " << v.to_string() << "\n";
}

void cmd_classify(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const MonomialOrder order = active_order(o, s);
  const Element f = single_expr(o, s);
  const ValuationClass c = classify(f, order);
  out.input["expression"] = o.exprs[0];
  out.input["order"] = order.to_string();
  out.result["class"] = to_string(c);
  out.result["valuation"] = val(f, order).to_string();
  out.text << to_string(c) << "\n";
  if (c != ValuationClass::OutsideLambda) {
    const std::string r = s.presentation->field.format(residue(f, order));
    out.result["residue"] = r;
    out.text << "residue: " << r << "\n";
  }
}

void cmd_graded(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const PresentationPtr gr = associated_graded(s.presentation);
  out.result["graded"] = json::parse(serialize_presentation(*gr));
  out.text << "associated graded: " << serialize_presentation(*gr) << "\n";
  if (o.exprs.empty()) return;
  const Element f = single_expr(o, s);
  const std::string sym = format_element(top_symbol(f, gr), active_order(o, s));
  const DegreeData d = degree_data(f);
  out.input["expression"] = o.exprs[0];
  out.result["degree"] = d.degree ? d.degree->get_str() : "-inf";
  out.result["symbol"] = sym;
  out.text << "degree: " << (d.degree ? d.degree->get_str() : "-inf") << "\n" << "symbol: " << sym << "\n";
}

void cmd_iterated(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const Presentation& p = *s.presentation;
  const IteratedForm form = iterated_form(s.presentation);
  json stages = json::array();
  for (const auto& st : form.stages) {
    const std::string z = "z" + std::to_string(st.index + 1);
    std::string line = "stage " + std::to_string(st.index + 1) + ": " + z + ", theta(c) = sigma_" +
                       std::to_string(st.index + 1) + "(c)";
    json images = json::array();
    for (std::size_t i = 0; i < st.generator_scalars.size(); ++i) {
      const std::string img = p.field.format(st.generator_scalars[i]);
      images.push_back(img);
      line += ", theta(z" + std::to_string(i + 1) + ") = " +
              (p.field.needs_parens(st.generator_scalars[i]) ? "(" + img + ")" : img) + "*z" + std::to_string(i + 1);
    }
    stages.push_back({{"generator", z}, {"theta_generators", images}});
    out.text << line << "\n";
  }
  out.result["stages"] = stages;
  if (o.exprs.size() == 2) {
    const Element f = parse_element(o.exprs[0], s.presentation);
    const Element g = parse_element(o.exprs[1], s.presentation);
    const Element staged = iterated_mul(form, f, g);
    const bool agrees = staged == f * g;
    const std::string text = format_element(staged, active_order(o, s));
    out.input["factors"] = o.exprs;
    out.result["product"] = text;
    out.result["agrees_with_mul"] = agrees;
    out.text << "product: " << text << "\n" << "agrees with mul: " << yes_no(agrees) << "\n";
  }
}

void cmd_generic(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const Presentation& p = *s.presentation;
  const GenericityReport rep = genericity_check(p.field, p.q, p.sigma);
  json deps = json::array();
  for (const auto& d : rep.dependencies) {
    json row = json::array();
    for (const auto& x : d) row.push_back(x.get_str());
    deps.push_back(row);
  }
  json pairs = json::array();
  for (const auto& [i, j] : rep.pairs) pairs.push_back("q" + std::to_string(i + 1) + std::to_string(j + 1));
  out.result["generic"] = rep.generic;
  out.result["rank"] = rep.rank;
  out.result["pairs"] = pairs;
  out.result["dependencies"] = deps;
  out.text << "generic: " << yes_no(rep.generic) << "\n" << "rank: " << rep.rank << " of " << rep.pairs.size() << "\n";
  for (const auto& d : rep.dependencies) {
    std::string rel;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;
      if (!rel.empty()) rel += " * ";
      rel += "q" + std::to_string(rep.pairs[k].first + 1) + std::to_string(rep.pairs[k].second + 1);
      if (d[k] != 1) rel += "^" + d[k].get_str();
    }
    out.text << "dependency: " << rel << " = 1\n";
  }
}

void cmd_invert(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const MonomialOrder order = active_order(o, s);
  if (o.bound.empty()) throw Error("Usage", "invert needs --bound <exponent>");
  const ExponentVector target = parse_exponent(o.bound);
  const HahnSeries f = HahnSeries::from_element(single_expr(o, s), order);
  const HahnSeries inv = series_invert(f, target, o.max_terms);
  const std::string text = format_series(inv);
  out.input["expression"] = o.exprs[0];
  out.input["bound"] = target.to_string();
  out.input["order"] = order.to_string();
  out.result["inverse"] = text;
  out.result["exact_below"] = inv.bound() ? inv.bound()->to_string() : "inf";
  const HahnSeries check = series_mul(f, inv);
  const bool reached = !check.bound() || !order.less(*check.bound(), target);
  out.result["target_reached"] = reached;
  out.text << text << "\n";
  if (!reached) {
    const std::string msg = "f * f^-1 = 1 only below " + check.bound()->to_string() + ", short of the requested " +
                            target.to_string();
    out.diagnostics.push_back(msg);
    out.text << "note: " << msg << "\n";
  }
}

void cmd_mpow(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const MonomialOrder order = active_order(o, s);
  const HahnSeries f = HahnSeries::from_element(single_expr(o, s), order);
  const bool member = m_power_membership(f, o.power);
  const std::string m = "m^" + std::to_string(o.power);
  out.input["expression"] = o.exprs[0];
  out.input["power"] = o.power;
  out.result["member"] = member;
  out.text << "in " << m << ": " << yes_no(member) << "\n";
  const Value v = f.valuation();
  if (member && !v.is_infinite()) {
    const PowerFactorization fac = factor_power(v.exponent(), o.power, s.presentation, order);
    json factors = json::array();
    std::string line;
    for (const auto& e : fac.exponents) {
      factors.push_back(format_monomial(e));
      line += (line.empty() ? "" : " * ") + ("(" + format_monomial(e) + ")");
    }
    out.result["factors"] = factors;
    out.result["unit"] = s.presentation->field.format(fac.unit);
    out.result["verified"] = fac.verified;
    out.text << "x^v(f) = " << format_monomial(v.exponent()) << ", " << line << " = "
             << format_element(Element::monomial(s.presentation, fac.unit, v.exponent())) << "\n";
  }
}

PresentationPtr default_torus(std::size_t n) {
  Field K = Field::rational_functions({"q"});
  Presentation p = trivial_presentation(n, n, K);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      p.q[i][j] = K.parameter(0);
      p.q[j][i] = K.parameter(0).inverse();
    }
  }
  return validate(std::move(p));
}

void cmd_conjecture(const Options& o, Output& out) {
  Session s;
  std::optional<MonomialOrder> order;
  if (!o.presentation.empty()) {
    s = load(o);
    order = active_order(o, s);
  } else {
    std::string order_text = o.order;
    if (order_text.empty()) {
      const char* env = std::getenv("SKEWPBW_ORDER");
      order_text = env && *env ? env : "lex2";
    }
    order = parse_order(order_text, 0);
    s.presentation = default_torus(order->dimension());
  }
  out.presentation = s.presentation;
  const ConjectureVerdict v = conjecture_check(*order, o.depth, s.presentation);
  out.input["order"] = order->to_string();
  out.input["depth"] = o.depth;
  out.result["verdict"] = to_string(v.kind);
  out.text << "order: " << order->to_string() << "\n" << "verdict: " << to_string(v.kind) << "\n";
  if (v.min_positive) {
    out.result["min_positive"] = v.min_positive->to_string();
    out.text << "least positive: " << v.min_positive->to_string() << "\n";
  }
  if (!v.cone_minima.empty()) {
    json minima = json::array();
    for (const auto& m : v.cone_minima) minima.push_back(m.to_string());
    out.result["cone_minima"] = minima;
    out.text << "least element of iA: " << v.cone_minima.front().to_string() << " ... "
             << v.cone_minima.back().to_string() << " (i = 1.." << v.cone_minima.size() << ")\n";
  }
  if (v.witness) {
    const std::string w = format_monomial(*v.witness);
    out.result["witness"] = w;
    out.result["witness_exponent"] = v.witness->to_string();
    out.text << "witness: " << w << "\n";
    json facs = json::array();
    for (const auto& f : v.factorizations) {
      const std::string first = format_monomial(f.exponents.front());
      std::string line = "(" + first + ")";
      if (f.power > 1) {
        line += " * (" + format_monomial(f.exponents.back()) + ")";
        if (f.power > 2) line += "^" + std::to_string(f.power - 1);
      }
      const std::string value = format_element(Element::monomial(s.presentation, f.unit, *v.witness));
      facs.push_back({{"i", f.power},
                      {"first", first},
                      {"rest", f.power > 1 ? format_monomial(f.exponents.back()) : ""},
                      {"product", value},
                      {"verified", f.verified}});
      out.text << "m^" << f.power << ": " << line << " = " << value << (f.verified ? "" : "  [NOT VERIFIED]") << "\n";
    }
    out.result["factorizations"] = facs;
  }
  out.result["all_verified"] = v.all_verified;
  out.result["note"] = v.note;
  out.text << "all verified: " << yes_no(v.all_verified) << "\n" << v.note << "\n";
}

void cmd_compare_val(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  if (o.tau.empty() || o.order2.empty()) throw Error("Usage", "compare-val needs --tau and --order2");
  const MonomialOrder o1 = active_order(o, s);
  const IntegerMatrix tau = parse_integer_matrix(o.tau);
  const MonomialOrder o2 = parse_order(o.order2, tau.size());
  std::vector<Element> samples;
  for (const auto& e : o.exprs) samples.push_back(parse_element(e, s.presentation));
  const ValuationComparison rep = compare_valuations(o1, o2, tau, samples);
  out.input["order1"] = o1.to_string();
  out.input["order2"] = o2.to_string();
  out.input["tau"] = o.tau;
  out.input["samples"] = o.exprs;
  out.result["holds"] = rep.holds;
  out.result["elements_checked"] = rep.elements_checked;
  out.result["pairs_checked"] = rep.pairs_checked;
  if (rep.counterexample) out.result["counterexample"] = *rep.counterexample;
  out.text << "tau(v1) = v2: " << yes_no(rep.holds) << " (" << rep.elements_checked << " elements, "
           << rep.pairs_checked << " pairs)\n";
  if (rep.counterexample) out.text << "counterexample: " << *rep.counterexample << "\n";
}

void cmd_rank(const Options& o, Output& out) {
  if (o.tau.empty()) throw Error("Usage", "rank needs --tau <matrix>");
  const bool r = maximal_rank(parse_integer_matrix(o.tau));
  out.input["tau"] = o.tau;
  out.result["maximal_rank"] = r;
  out.text << "maximal rank: " << yes_no(r) << "\n";
}

void cmd_extend(const Options& o, Output& out) {
  const Session s = load(o);
  out.presentation = s.presentation;
  const PresentationPtr q = extend_scalars(s.presentation);
  out.result["extended"] = json::parse(serialize_presentation(*q));
  out.text << "over Q: " << serialize_presentation(*q) << "\n";
  if (!o.exprs.empty()) {
    const std::string img = format_element(extend_scalars(single_expr(o, s), q), active_order(o, s));
    out.input["expression"] = o.exprs[0];
    out.result["image"] = img;
    out.text << "image: " << img << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in skew PBW extensions and quantum tori"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  using Handler = void (*)(const Options&, Output&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* c = app.add_subcommand(name, help);
    c->fallthrough();
    commands.emplace_back(c, h);
    return c;
  };
  auto with_p = [&](CLI::App* c) { c->add_option("-p,--presentation", o.presentation, "Presentation JSON file"); };
  auto with_e = [&](CLI::App* c) { c->add_option("-e,--expr", o.exprs, "Element expression (repeatable)"); };
  auto with_order = [&](CLI::App* c) { c->add_option("--order", o.order, "lex, lexK or a matrix literal"); };
  auto with_all = [&](CLI::App* c) {
    with_p(c);
    with_e(c);
    with_order(c);
  };

  auto* c = sub("validate", "Check a presentation", cmd_validate);
  with_p(c);
  c = sub("normalize", "Normal form of expressions", cmd_normalize);
  with_all(c);
  c = sub("mul", "Product of the given expressions, left to right", cmd_mul);
  with_all(c);
  c = sub("val", "Valuation: least exponent of the support", cmd_val);
  with_all(c);
  c = sub("classify", "Position relative to the valuation ring", cmd_classify);
  with_all(c);
  c = sub("graded", "Associated graded ring and principal symbol", cmd_graded);
  with_all(c);
  c = sub("iterated", "Iterated Ore form; with two -e, the staged product", cmd_iterated);
  with_all(c);
  c = sub("generic", "Genericity of the multiparameters", cmd_generic);
  with_p(c);
  c = sub("invert", "Inverse in the series completion", cmd_invert);
  with_all(c);
  c->add_option("--bound", o.bound, "Exponent below which f * f^-1 = 1 is required");
  c->add_option("--max-terms", o.max_terms, "Cap on the geometric series length");
  c = sub("mpow", "Membership in m^i", cmd_mpow);
  with_all(c);
  c->add_option("-i,--power", o.power, "Power i >= 1")->check(CLI::PositiveNumber);
  c = sub("conjecture", "Search for a nonzero element of every m^i", cmd_conjecture);
  with_p(c), with_order(c);
  c->add_option("--depth", o.depth, "Largest i checked")->check(CLI::PositiveNumber);
  c = sub("compare-val", "Compare two valuations through tau", cmd_compare_val);
  with_all(c);
  c->add_option("--order2", o.order2, "Order on the target group");
  c->add_option("--tau", o.tau, "Integer matrix Z^n -> Z^k");
  c = sub("rank", "Maximal rank test for a square integer matrix", cmd_rank);
  c->add_option("--tau", o.tau, "Integer matrix");
  c = sub("extend-scalars", "Image of a presentation over Z in the one over Q", cmd_extend);
  with_all(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [cmd, handler] : commands) {
    if (!cmd->parsed()) continue;
    Output out;
    try {
      handler(o, out);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return e.kind() == "Usage" ? 2 : 1;
    }
    if (o.format == "json") {
      json record;
      record["command"] = cmd->get_name();
      record["presentation_hash"] = out.presentation ? json(presentation_hash(*out.presentation)) : json(nullptr);
      record["input"] = out.input;
      record["result"] = out.result;
      record["diagnostics"] = out.diagnostics;
      std::cout << record.dump() << "\n";
    } else {
      std::cout << out.text.str();
    }
    return 0;
  }
  return 2;
}
