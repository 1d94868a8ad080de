#pragma once
// Serialization: JSON (with exact coefficients plus float approximations),
// CSV for character tables, and LaTeX in the display style of the source
// formulas. JSON parsing is provided for the element-bearing types so CLI
// output round-trips.

#include <cstdlib>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "chartab.hpp"
#include "cyclotomic.hpp"
#include "groups.hpp"
#include "idempotents.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "reps.hpp"

namespace diquat::io {

// Insertion-ordered JSON keeps emission deterministic, so emit-parse-emit
// produces identical bytes.
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON emitters and parsers

inline ojson cyc_to_json(const Cyclotomic& c) {
  ojson coeffs = ojson::array();
  for (const Rational& r : c.coeffs()) coeffs.push_back(r.str());
  std::complex<double> z = c.to_complex();
  return ojson{{"order", c.order()},
               {"coeffs", std::move(coeffs)},
               {"approx", {z.real(), z.imag()}}};
}

inline Cyclotomic cyc_from_json(const ojson& j) {
  unsigned order = j.at("order").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs")) coeffs.push_back(Rational::parse(s.get<std::string>()));
  return Cyclotomic::from_coeffs(order, coeffs);
}

inline ojson kind_to_json(const GroupKind& kind) {
  ojson j{{"type", kind.is_dihedral() ? "dihedral" : "quaternion"}};
  j[kind.is_dihedral() ? "n" : "m"] = kind.param();
  return j;
}

inline GroupKind kind_from_json(const ojson& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "dihedral") return GroupKind::dihedral(j.at("n").get<unsigned>());
  if (type == "quaternion") return GroupKind::quaternion(j.at("m").get<unsigned>());
  throw std::invalid_argument("kind_from_json: unknown type '" + type + "'");
}

inline ojson alg_to_json(const AlgebraElement& x) {
  ojson terms = ojson::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back(ojson{{"elem", render_elem(x.kind(), g)}, {"coeff", cyc_to_json(c)}});
  return ojson{{"group", kind_to_json(x.kind())},
               {"field_order", x.field_order()},
               {"terms", std::move(terms)}};
}

inline AlgebraElement alg_from_json(const ojson& j) {
  GroupKind kind = kind_from_json(j.at("group"));
  AlgebraElement x(kind, j.at("field_order").get<unsigned>());
  for (const auto& t : j.at("terms"))
    x.add_term(parse_elem(kind, t.at("elem").get<std::string>()),
               cyc_from_json(t.at("coeff")));
  return x;
}

inline ojson mat_to_json(const Mat2& m) {
  return ojson{{"order", m.order()},
               {"entries",
                {{cyc_to_json(m.a), cyc_to_json(m.b)},
                 {cyc_to_json(m.c), cyc_to_json(m.d)}}}};
}

inline ojson report_to_json(const VerifyReport& rep) {
  return ojson{{"checks", rep.checks}, {"passed", rep.ok()}, {"failures", rep.failures}};
}

inline ojson chartab_to_json(const CharacterTable& t) {
  ojson classes = ojson::array();
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    classes.push_back(ojson{{"representative", render_elem(t.kind, t.classes[c].representative)},
                            {"size", t.class_sizes[c]}});
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    ojson values = ojson::array();
    for (const Cyclotomic& v : t.rows[i]) values.push_back(cyc_to_json(v));
    rows.push_back(ojson{{"label", t.row_labels[i]},
                         {"degree", t.degree(i).str()},
                         {"values", std::move(values)}});
  }
  return ojson{{"group", kind_to_json(t.kind)},
               {"classes", std::move(classes)},
               {"rows", std::move(rows)}};
}

// Whether a verification report contains a failure mentioning `what`.
inline bool report_mentions(const VerifyReport& rep, const std::string& what) {
  for (const std::string& f : rep.failures)
    if (f.find(what) != std::string::npos) return true;
  return false;
}

inline ojson idemset_to_json(const IdempotentSet& s, const VerifyReport& rep) {
  ojson linear = ojson::array();
  for (const AlgebraElement& e : s.linear) linear.push_back(alg_to_json(e));
  ojson pairs = ojson::array();
  for (const SplitTriple& t : s.pairs)
    pairs.push_back(ojson{{"k", t.k},
                          {"central", alg_to_json(t.central)},
                          {"prime", alg_to_json(t.prime)},
                          {"dprime", alg_to_json(t.dprime)}});
  ojson verdict{{"checks", rep.checks},
                {"sum_is_one", !report_mentions(rep, "primitive sum")},
                {"all_idempotent", !report_mentions(rep, "not idempotent")},
                {"pairwise_orthogonal", !report_mentions(rep, "not orthogonal")},
                {"centrals_central", !report_mentions(rep, "not central")},
                {"splits_sum", !report_mentions(rep, "does not sum")},
                {"count_ok", !report_mentions(rep, "count mismatch")},
                {"passed", rep.ok()},
                {"failures", rep.failures}};
  return ojson{{"group", kind_to_json(s.kind)},
               {"field_order", s.kind.field_order()},
               {"linear", std::move(linear)},
               {"pairs", std::move(pairs)},
               {"report", std::move(verdict)}};
}

// ---------------------------------------------------------------------------
// CSV

// Header columns carry the class representative and its size: "r (2)".
inline std::string chartab_to_csv(const CharacterTable& t) {
  std::string out = "character";
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    out += "," + render_elem(t.kind, t.classes[c].representative) + " (" +
           std::to_string(t.class_sizes[c]) + ")";
  out += "\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += t.row_labels[i];
    for (const Cyclotomic& v : t.rows[i]) out += "," + v.str();
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaTeX

inline std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  std::string sign = r.sign() < 0 ? "-" : "";
  Rational a = r.sign() < 0 ? -r : r;
  return sign + "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

namespace detail {

inline std::string latex_super(unsigned e) {
  if (e == 1) return "";
  std::string digits = std::to_string(e);
  return e < 10 ? "^" + digits : "^{" + digits + "}";
}

inline std::string latex_zeta(unsigned order, unsigned e) {
  std::string sub = order < 10 ? std::to_string(order) : "{" + std::to_string(order) + "}";
  return "\\zeta_" + sub + latex_super(e);
}

}  // namespace detail

// Rational values as plain (signed) fractions; everything else as the
// reduced polynomial in zeta_N.
inline std::string latex_cyc(const Cyclotomic& c) {
  if (c.is_rational()) return latex_rational(c.rational_value());
  std::string out;
  bool first = true;
  for (const auto& [e, q] : c.terms()) {
    bool neg = q.sign() < 0;
    Rational mag = neg ? -q : q;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (e == 0) {
      out += latex_rational(mag);
    } else {
      if (!mag.is_one()) out += latex_rational(mag);
      out += detail::latex_zeta(c.order(), e);
    }
    first = false;
  }
  return out;
}

inline std::string latex_elem(const GroupKind& kind, const GroupElem& g) {
  g_check(kind, g);
  if (g.rot == 0 && g.refl == 0) return "\\mathbf{1}";
  std::string out;
  if (g.rot != 0) out += std::string(1, kind.rotation_letter()) + detail::latex_super(g.rot);
  if (g.refl) out += std::string(1, kind.reflection_letter());
  return out;
}

// Display form of an algebra element. When every coefficient is rational a
// common factor is pulled out, giving e.g. \frac{1}{4}(\mathbf{1} - r^2 +
// rs - r^3s); otherwise terms are emitted with their cyclotomic scalars.
inline std::string latex_alg(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  const GroupKind& kind = x.kind();

  bool all_rational = true;
  for (const auto& [g, c] : x.terms())
    if (!c.is_rational()) {
      all_rational = false;
      break;
    }

  if (all_rational) {
    mpz_class lcm_den = 1, gcd_num = 0;
    for (const auto& [g, c] : x.terms()) {
      Rational q = c.rational_value();
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
      lcm_den = l;
    }
    std::vector<mpz_class> ints;
    for (const auto& [g, c] : x.terms()) {
      Rational scaled = c.rational_value() * Rational(mpz_class(lcm_den));
      ints.push_back(scaled.num());
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), gcd_num.get_mpz_t(), ints.back().get_mpz_t());
      gcd_num = gg;
    }
    Rational scale(gcd_num, lcm_den);
    std::string inner;
    bool first = true;
    std::size_t idx = 0;
    for (const auto& [g, c] : x.terms()) {
      mpz_class t = ints[idx++] / gcd_num;
      bool neg = t < 0;
      mpz_class mag = neg ? mpz_class(-t) : t;
      inner += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mag != 1) inner += mag.get_str();
      inner += latex_elem(kind, g);
      first = false;
    }
    if (scale.is_one()) return inner;
    if (x.support_size() == 1) {
      std::string sign = scale.sign() < 0 ? "-" : "";
      Rational mag = scale.sign() < 0 ? -scale : scale;
      std::string body = inner[0] == '-' ? inner.substr(1) : inner;
      if (inner[0] == '-') sign = sign == "-" ? "" : "-";
      std::string coeff = mag.is_one() ? "" : latex_rational(mag);
      return sign + coeff + body;
    }
    return latex_rational(scale) + "(" + inner + ")";
  }

  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    std::string body;
    bool neg = false;
    bool identity = g.rot == 0 && g.refl == 0;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      neg = q.sign() < 0;
      Rational mag = neg ? -q : q;
      body = mag.is_one() && !identity ? "" : latex_rational(mag);
      if (!identity) body += latex_elem(kind, g);
    } else if (c.terms().size() == 1) {
      const auto& [e, q] = c.terms()[0];
      neg = q.sign() < 0;
      Rational mag = neg ? -q : q;
      if (!mag.is_one()) body = latex_rational(mag);
      body += detail::latex_zeta(c.order(), e);
      if (!identity) body += latex_elem(kind, g);
    } else {
      body = "(" + latex_cyc(c) + ")";
      if (!identity) body += latex_elem(kind, g);
    }
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += body;
    first = false;
  }
  return out;
}

inline std::string latex_chartab(const CharacterTable& t) {
  std::string out = "\\begin{array}{c|";
  out += std::string(t.classes.size(), 'c');
  out += "}\n";
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    out += " & ";
    GroupElem rep = t.classes[c].representative;
    out += rep.rot == 0 && rep.refl == 0 ? std::string("\\mathbf{1}") : latex_elem(t.kind, rep);
    out += " \\,(" + std::to_string(t.class_sizes[c]) + ")";
  }
  out += " \\\\\\hline\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += "\\" + t.row_labels[i];
    for (const Cyclotomic& v : t.rows[i]) out += " & " + latex_cyc(v);
    out += " \\\\\n";
  }
  out += "\\end{array}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Plain text

inline std::string chartab_to_text(const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"character"};
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    head.push_back(render_elem(t.kind, t.classes[c].representative) + " (" +
                   std::to_string(t.class_sizes[c]) + ")");
  cells.push_back(head);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> row{t.row_labels[i]};
    for (const Cyclotomic& v : t.rows[i]) row.push_back(v.str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

}  // namespace diquat::io
