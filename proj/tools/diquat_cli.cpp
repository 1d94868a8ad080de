// Command-line front end: generate character tables and complete idempotent
// sets, emit the explicit isomorphism between the two order-8 group algebras,
// evaluate the exact trigonometric identities, and run verification sweeps.
//
// Exit codes: 0 all verifications pass, 1 a verification failed, 2 bad usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <diquat/idempotents.hpp>
#include <diquat/io.hpp>
#include <diquat/iso_q8_d8.hpp>
#include <diquat/trig.hpp>

using namespace diquat;
using io::ojson;

namespace {

struct Options {
  std::string format = "text";
  std::string out;
};

int deliver(const Options& opt, const std::string& payload, bool passed) {
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out);
    if (!f) {
      std::cerr << "cannot open output file: " << opt.out << "\n";
      return 2;
    }
    f << payload;
  }
  return passed ? 0 : 1;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// generate (dihedral / quaternion)

// Display names for the members of a complete set, in primitives() order.
std::vector<std::string> idempotent_names(const IdempotentSet& s, bool latex) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.linear.size(); ++i)
    names.push_back(latex ? "e_" + std::to_string(i + 1) : "e" + std::to_string(i + 1));
  for (const SplitTriple& t : s.pairs) {
    std::string k = std::to_string(t.k);
    if (latex) {
      names.push_back("e'_{\\rho_" + k + "}");
      names.push_back("e''_{\\rho_" + k + "}");
    } else {
      names.push_back("e'_rho" + k);
      names.push_back("e''_rho" + k);
    }
  }
  return names;
}

int cmd_generate(const GroupKind& kind, const Options& opt) {
  CharacterTable table = character_table(kind);
  IdempotentSet set = complete_set(kind);
  VerifyReport rep = verify_complete_set(set);

  if (opt.format == "json") {
    ojson j{{"table", io::chartab_to_json(table)},
            {"idempotents", io::idemset_to_json(set, rep)}};
    return deliver(opt, dump(j), rep.ok());
  }

  if (opt.format == "latex") {
    std::string out = io::latex_chartab(table);
    std::vector<std::string> names = idempotent_names(set, true);
    std::size_t i = 0;
    for (const AlgebraElement* e : set.primitives())
      out += names[i++] + " = " + io::latex_alg(*e) + "\n";
    for (const SplitTriple& t : set.pairs)
      out += "e_{\\rho_" + std::to_string(t.k) + "} = " + io::latex_alg(t.central) + "\n";
    out += "% " + rep.summary() + "\n";
    return deliver(opt, out, rep.ok());
  }

  std::string out = kind.name() + "\n\n" + io::chartab_to_text(table) + "\n";
  std::vector<std::string> names = idempotent_names(set, false);
  std::size_t i = 0;
  for (const AlgebraElement* e : set.primitives())
    out += names[i++] + " = " + e->str() + "\n";
  for (const SplitTriple& t : set.pairs)
    out += "e_rho" + std::to_string(t.k) + " = " + t.central.str() + "\n";
  out += "\n" + rep.summary() + "\n";
  return deliver(opt, out, rep.ok());
}

// ---------------------------------------------------------------------------
// rep

std::string latex_mat(const Mat2& m) {
  return "\\begin{pmatrix} " + io::latex_cyc(m.a) + " & " + io::latex_cyc(m.b) +
         " \\\\ " + io::latex_cyc(m.c) + " & " + io::latex_cyc(m.d) +
         " \\end{pmatrix}";
}

int cmd_rep(const GroupKind& kind, unsigned k, const Options& opt) {
  Rep2 rep = rep_of(kind, k);
  VerifyReport check = verify_relations(rep);
  char rl = kind.rotation_letter(), fl = kind.reflection_letter();

  if (opt.format == "json") {
    ojson j{{"group", io::kind_to_json(kind)},
            {"k", k},
            {"field_order", rep.field_order()},
            {"rotation", io::mat_to_json(rep.rot)},
            {"reflection", io::mat_to_json(rep.refl)},
            {"report", io::report_to_json(check)}};
    return deliver(opt, dump(j), check.ok());
  }

  if (opt.format == "latex") {
    std::string out = "\\rho_" + std::to_string(k) + "(" + rl + ") = " +
                      latex_mat(rep.rot) + "\n\\rho_" + std::to_string(k) + "(" + fl +
                      ") = " + latex_mat(rep.refl) + "\n% " + check.summary() + "\n";
    return deliver(opt, out, check.ok());
  }

  std::string out = kind.name() + " rho" + std::to_string(k) + "\n";
  out += std::string(1, rl) + " -> " + rep.rot.str() + "\n";
  out += std::string(1, fl) + " -> " + rep.refl.str() + "\n";
  out += check.summary() + "\n";
  return deliver(opt, out, check.ok());
}

// ---------------------------------------------------------------------------
// iso

int cmd_iso(const Options& opt) {
  IsoQ8D8 iso;
  VerifyReport hom = verify_homomorphism(iso);
  VerifyReport ksys = verify_k_system();
  VerifyReport corr = idempotent_correspondence(iso);
  bool passed = hom.ok() && ksys.ok() && corr.ok();

  const auto& src = q8_basis_order();
  const auto& dst = d8_basis_order();

  if (opt.format == "json") {
    ojson srcb = ojson::array(), dstb = ojson::array();
    for (const GroupElem& g : src) srcb.push_back(render_elem(iso.source(), g));
    for (const GroupElem& g : dst) dstb.push_back(render_elem(iso.target(), g));
    ojson matrix = ojson::array();
    for (const auto& row : iso.matrix()) {
      ojson jrow = ojson::array();
      for (const Cyclotomic& c : row) jrow.push_back(io::cyc_to_json(c));
      matrix.push_back(std::move(jrow));
    }
    ojson images = ojson::array();
    for (const GroupElem& g : src)
      images.push_back(ojson{{"elem", render_elem(iso.source(), g)},
                             {"image", io::alg_to_json(iso.image_of(g))}});
    ojson j{{"source", io::kind_to_json(iso.source())},
            {"target", io::kind_to_json(iso.target())},
            {"source_basis", std::move(srcb)},
            {"target_basis", std::move(dstb)},
            {"matrix", std::move(matrix)},
            {"images", std::move(images)},
            {"reports",
             {{"homomorphism", io::report_to_json(hom)},
              {"k_system", io::report_to_json(ksys)},
              {"idempotent_correspondence", io::report_to_json(corr)}}},
            {"passed", passed}};
    return deliver(opt, dump(j), passed);
  }

  if (opt.format == "latex") {
    std::string out;
    for (const GroupElem& g : src)
      out += "\\psi(" + io::latex_elem(iso.source(), g) + ") = " +
             io::latex_alg(iso.image_of(g)) + "\n";
    out += "% homomorphism: " + hom.summary() + "\n";
    out += "% k-system: " + ksys.summary() + "\n";
    out += "% idempotent correspondence: " + corr.summary() + "\n";
    return deliver(opt, out, passed);
  }

  std::string out = "psi: C[" + iso.source().name() + "] -> C[" + iso.target().name() + "]\n\n";
  for (const GroupElem& g : src)
    out += "psi(" + render_elem(iso.source(), g) + ") = " + iso.image_of(g).str() + "\n";
  out += "\nhomomorphism:              " + hom.summary() + "\n";
  out += "k-system:                  " + ksys.summary() + "\n";
  out += "idempotent correspondence: " + corr.summary() + "\n";
  return deliver(opt, out, passed);
}

// ---------------------------------------------------------------------------
// trig

int cmd_trig_alt(unsigned n, unsigned k, const Options& opt) {
  Cyclotomic v = alternating_cos_sum(n, k);
  if (opt.format == "json")
    return deliver(opt,
                   dump(ojson{{"identity", "alt"},
                              {"n", n},
                              {"k", k},
                              {"value", io::cyc_to_json(v)},
                              {"passed", true}}),
                   true);
  std::string out = "sum_{r=0}^{" + std::to_string(n - 1) + "} (-1)^r cos(r*" +
                    std::to_string(k) + "*pi/" + std::to_string(n) + ") = " + v.str() +
                    "\n";
  return deliver(opt, out, true);
}

int cmd_trig_partial(long long p, unsigned q, unsigned count, const Options& opt) {
  RationalAngle angle(p, q);
  auto [lhs, rhs] = cos_partial_sum(angle, count);
  if (opt.format == "json")
    return deliver(opt,
                   dump(ojson{{"identity", "partial"},
                              {"p", p},
                              {"q", q},
                              {"count", count},
                              {"value", io::cyc_to_json(lhs)},
                              {"passed", lhs == rhs}}),
                   lhs == rhs);
  std::string out = "sum_{r=1}^{" + std::to_string(count) + "} cos(r*" +
                    std::to_string(p) + "*pi/" + std::to_string(q) + ") = " + lhs.str() +
                    "\n";
  return deliver(opt, out, lhs == rhs);
}

int cmd_trig_ortho(const GroupKind& kind, const Options& opt) {
  VerifyReport rep = orthogonality_sums(kind);
  if (opt.format == "json")
    return deliver(opt,
                   dump(ojson{{"identity", "ortho"},
                              {"group", io::kind_to_json(kind)},
                              {"report", io::report_to_json(rep)}}),
                   rep.ok());
  return deliver(opt, kind.name() + " orthogonality sums: " + rep.summary() + "\n",
                 rep.ok());
}

// ---------------------------------------------------------------------------
// verify sweeps

struct SweepRow {
  std::string name;
  VerifyReport rep;
};

int deliver_sweep(const std::string& suite, const std::vector<SweepRow>& rows,
                  const Options& opt) {
  bool passed = true;
  std::size_t checks = 0;
  for (const SweepRow& r : rows) {
    passed = passed && r.rep.ok();
    checks += r.rep.checks;
  }
  if (opt.format == "json") {
    ojson entries = ojson::array();
    for (const SweepRow& r : rows)
      entries.push_back(ojson{{"name", r.name},
                              {"checks", r.rep.checks},
                              {"passed", r.rep.ok()},
                              {"failures", r.rep.failures}});
    ojson j{{"suite", suite},
            {"entries", std::move(entries)},
            {"checks", checks},
            {"passed", passed}};
    return deliver(opt, dump(j), passed);
  }
  std::string out;
  for (const SweepRow& r : rows) out += r.name + ": " + r.rep.summary() + "\n";
  out += "suite '" + suite + "': " + std::to_string(checks) + " checks, " +
         (passed ? "PASS" : "FAIL") + "\n";
  return deliver(opt, out, passed);
}

int verify_idempotents_sweep(unsigned dmax, unsigned qmax, const Options& opt) {
  std::vector<SweepRow> rows;
  for (unsigned n = 1; n <= dmax; ++n) {
    GroupKind kind = GroupKind::dihedral(n);
    rows.push_back({kind.name(), verify_complete_set(complete_set(kind))});
  }
  for (unsigned m = 1; m <= qmax; ++m) {
    GroupKind kind = GroupKind::quaternion(m);
    rows.push_back({kind.name(), verify_complete_set(complete_set(kind))});
  }
  return deliver_sweep("idempotents", rows, opt);
}

int verify_orthogonality_sweep(unsigned dmax, unsigned qmax, const Options& opt) {
  std::vector<SweepRow> rows;
  for (unsigned n = 1; n <= dmax; ++n) {
    GroupKind kind = GroupKind::dihedral(n);
    rows.push_back({kind.name(), verify_orthogonality(character_table(kind))});
  }
  for (unsigned m = 1; m <= qmax; ++m) {
    GroupKind kind = GroupKind::quaternion(m);
    rows.push_back({kind.name(), verify_orthogonality(character_table(kind))});
  }
  return deliver_sweep("orthogonality", rows, opt);
}

// Closed-form split pairs against the matrix-unit pullbacks, per block.
VerifyReport oracle_one(const GroupKind& kind) {
  VerifyReport out;
  unsigned j = prime_unit_index(kind);
  for (unsigned k = 1; k <= kind.two_dim_count(); ++k) {
    SplitTriple s = split_of(kind, k);
    Rep2 rep = rep_of(kind, k);
    AlgebraElement u1 = pullback_matrix_unit(rep, s.central, 1);
    AlgebraElement u2 = pullback_matrix_unit(rep, s.central, 2);
    std::string name = kind.name() + " rho" + std::to_string(k);
    out.require(s.prime == (j == 1 ? u1 : u2), name + ": prime != its pullback");
    out.require(s.dprime == (j == 1 ? u2 : u1), name + ": dprime != its pullback");
    out.require(u1 + u2 == s.central, name + ": pullbacks do not sum to the central");
  }
  return out;
}

int verify_oracle_sweep(unsigned dmax, unsigned qmax, const Options& opt) {
  std::vector<SweepRow> rows;
  for (unsigned n = 3; n <= dmax; ++n) {
    GroupKind kind = GroupKind::dihedral(n);
    if (kind.has_two_dim_reps()) rows.push_back({kind.name(), oracle_one(kind)});
  }
  for (unsigned m = 2; m <= qmax; ++m) {
    GroupKind kind = GroupKind::quaternion(m);
    if (kind.has_two_dim_reps()) rows.push_back({kind.name(), oracle_one(kind)});
  }
  return deliver_sweep("oracle", rows, opt);
}

int verify_trig_sweep(unsigned max, const Options& opt) {
  std::vector<SweepRow> rows;

  VerifyReport alt;
  for (unsigned n = 2; n <= max; ++n)
    for (unsigned k = 1; k < n; ++k) {
      Cyclotomic v = alternating_cos_sum(n, k);  // self-certifying
      alt.require((n + k) % 2 ? v == Cyclotomic::one(v.order()) : v.is_zero(),
                  "alt(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  rows.push_back({"alternating sums", std::move(alt)});

  VerifyReport part;
  for (unsigned q = 1; q <= std::min(max, 20u); ++q)
    for (long long p = 1; p < 2 * static_cast<long long>(q); ++p)
      for (unsigned cnt : {1u, 3u, 8u}) {
        auto [lhs, rhs] = cos_partial_sum(RationalAngle(p, q), cnt);
        part.require(lhs == rhs, "partial(p=" + std::to_string(p) +
                                     ",q=" + std::to_string(q) +
                                     ",n=" + std::to_string(cnt) + ")");
      }
  rows.push_back({"partial sums", std::move(part)});

  for (unsigned n = 3; n <= std::min(max, 12u); ++n)
    rows.push_back({"dihedral(" + std::to_string(n) + ") sums",
                    orthogonality_sums(GroupKind::dihedral(n))});
  for (unsigned m = 2; m <= std::min(max, 8u); ++m)
    rows.push_back({"quaternion(" + std::to_string(m) + ") sums",
                    orthogonality_sums(GroupKind::quaternion(m))});
  return deliver_sweep("trig", rows, opt);
}

int verify_iso_sweep(const Options& opt) {
  IsoQ8D8 iso;
  std::vector<SweepRow> rows;
  rows.push_back({"homomorphism", verify_homomorphism(iso)});
  rows.push_back({"k-system", verify_k_system()});
  rows.push_back({"idempotent correspondence", idempotent_correspondence(iso)});
  return deliver_sweep("iso", rows, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact primitive idempotents for the dihedral and generalized "
               "quaternion group algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "text"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Write output to a file instead of stdout");

  unsigned n = 0, m = 0, k = 1;
  long long p = 1;
  unsigned q = 1, count = 1;
  std::string identity;
  unsigned dmax = 16, qmax = 8, omax = 12, tmax = 16;

  CLI::App* dihedral = app.add_subcommand("dihedral", "Character table and complete idempotent set of a dihedral group algebra");
  dihedral->add_option("--n", n, "Half the group order")->required()->check(CLI::PositiveNumber);

  CLI::App* quaternion = app.add_subcommand("quaternion", "Character table and complete idempotent set of a generalized quaternion group algebra");
  quaternion->add_option("--m", m, "A quarter of the group order")->required()->check(CLI::PositiveNumber);

  CLI::App* rep = app.add_subcommand("rep", "Generator matrices of a two-dimensional irreducible representation");
  auto* rep_n = rep->add_option("--n", n, "Dihedral parameter")->check(CLI::PositiveNumber);
  auto* rep_m = rep->add_option("--m", m, "Quaternion parameter")->check(CLI::PositiveNumber);
  rep->add_option("--k", k, "Representation index")->capture_default_str()->check(CLI::PositiveNumber);
  rep_n->excludes(rep_m);

  CLI::App* iso = app.add_subcommand("iso", "Explicit algebra isomorphism between the order-8 quaternion and dihedral group algebras");

  CLI::App* trig = app.add_subcommand("trig", "Exact trigonometric identity evaluation");
  trig->add_option("--identity", identity, "Which identity: alt, partial, or ortho")
      ->required()
      ->check(CLI::IsMember({"alt", "partial", "ortho"}));
  trig->add_option("--n", n, "Modulus (alt) or dihedral parameter (ortho)")->check(CLI::PositiveNumber);
  trig->add_option("--m", m, "Quaternion parameter (ortho)")->check(CLI::PositiveNumber);
  trig->add_option("--k", k, "Frequency index (alt)")->check(CLI::PositiveNumber);
  trig->add_option("--p", p, "Angle numerator: theta = p*pi/q (partial)");
  trig->add_option("--q", q, "Angle denominator (partial)")->check(CLI::PositiveNumber);
  trig->add_option("--count", count, "Number of summands (partial)")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "Verification sweeps");
  verify->require_subcommand(1);
  verify->fallthrough();
  CLI::App* v_idem = verify->add_subcommand("idempotents", "Complete-set certification sweep");
  v_idem->add_option("--dihedral-max", dmax, "Largest dihedral parameter")->capture_default_str();
  v_idem->add_option("--quaternion-max", qmax, "Largest quaternion parameter")->capture_default_str();
  CLI::App* v_orth = verify->add_subcommand("orthogonality", "Character-table orthogonality sweep");
  v_orth->add_option("--dihedral-max", dmax, "Largest dihedral parameter")->capture_default_str();
  v_orth->add_option("--quaternion-max", qmax, "Largest quaternion parameter")->capture_default_str();
  CLI::App* v_oracle = verify->add_subcommand("oracle", "Closed forms against matrix-unit pullbacks");
  v_oracle->add_option("--max", omax, "Largest parameter for both families")->capture_default_str();
  auto* v_oracle_d = v_oracle->add_option("--dihedral-max", dmax, "Override for the dihedral family");
  auto* v_oracle_q = v_oracle->add_option("--quaternion-max", qmax, "Override for the quaternion family");
  CLI::App* v_trig = verify->add_subcommand("trig", "Trigonometric identity sweep");
  v_trig->add_option("--max", tmax, "Range bound")->capture_default_str();
  CLI::App* v_iso = verify->add_subcommand("iso", "Isomorphism certification");

  try {
    app.parse(argc, argv);

    if (*dihedral) return cmd_generate(GroupKind::dihedral(n), opt);
    if (*quaternion) return cmd_generate(GroupKind::quaternion(m), opt);
    if (*rep) {
      if (n == 0 && m == 0)
        throw CLI::RequiredError("rep: one of --n or --m");
      GroupKind kind = n ? GroupKind::dihedral(n) : GroupKind::quaternion(m);
      return cmd_rep(kind, k, opt);
    }
    if (*iso) return cmd_iso(opt);
    if (*trig) {
      if (identity == "alt") {
        if (n == 0) throw CLI::RequiredError("trig --identity alt: --n");
        return cmd_trig_alt(n, k, opt);
      }
      if (identity == "partial") return cmd_trig_partial(p, q, count, opt);
      if (n == 0 && m == 0)
        throw CLI::RequiredError("trig --identity ortho: one of --n or --m");
      GroupKind kind = n ? GroupKind::dihedral(n) : GroupKind::quaternion(m);
      return cmd_trig_ortho(kind, opt);
    }
    if (*verify) {
      if (*v_idem) return verify_idempotents_sweep(dmax, qmax, opt);
      if (*v_orth) return verify_orthogonality_sweep(dmax, qmax, opt);
      if (*v_oracle)
        return verify_oracle_sweep(*v_oracle_d ? dmax : omax, *v_oracle_q ? qmax : omax,
                                   opt);
      if (*v_trig) return verify_trig_sweep(tmax, opt);
      if (*v_iso) return verify_iso_sweep(opt);
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}
