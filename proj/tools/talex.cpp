// talex command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "talex/io.hpp"
#include "talex/laurent_parse.hpp"
#include "talex/talex.hpp"

namespace {

using namespace talex;

struct Options {
  std::string pres, pd, rep, constraints, seifert, lambda, pattern, companion, omega, report;
  int winding = 0;
  int genus = 0;
  int column = -1;
  std::uint64_t seed = 0;
  bool json = false;
  Tolerances tol;
};

Presentation load_presentation(const Options& o) {
  if (!o.pres.empty() && !o.pd.empty()) throw ParseError("bad_arguments", "give only one of --pres and --pd");
  if (!o.pres.empty()) return parse_presentation(read_file(o.pres));
  if (!o.pd.empty()) return pd_to_wirtinger(parse_pd(read_file(o.pd)));
  throw ParseError("bad_arguments", "a knot group is required (--pres or --pd)");
}

QLaurent load_polynomial(const std::string& path) {
  std::string text = read_file(path);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return parse_laurent(text);
}

Complex parse_complex(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  double re = 0, im = 0;
  if (!(in >> re)) throw ParseError("bad_arguments", "expected 're' or 're,im': " + text);
  in >> im;
  return {re, im};
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (!o.report.empty()) {
    std::ofstream out(o.report);
    if (!out) throw ParseError("io_error", "cannot write " + o.report);
    out << j.dump(2) << "\n";
  }
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// One solved or failed sample of a meridian-trace sweep.
struct Sample {
  Complex y;
  std::optional<CRepresentation> rho;
  std::string error;
};

std::vector<Sample> sweep_samples(const Presentation& p, const ConstraintSet& cs, const Options& o) {
  if (!cs.sweep) throw ParseError("bad_constraint", "constraint file has no 'sweep' line");
  std::vector<Sample> out(static_cast<std::size_t>(cs.sweep->samples));
  parallel_for(out.size(), [&](std::size_t i) {
    Sample s;
    s.y = cs.sweep->at(static_cast<int>(i));
    auto constraints = cs.traces;
    if (p.meridional) {
      auto m = meridian_constraints(p, s.y);
      constraints.insert(constraints.end(), m.begin(), m.end());
    } else {
      constraints.push_back({FreeWord::generator(0), s.y});
    }
    SolveOptions opt;
    opt.seed = o.seed + i;
    opt.target = std::min(opt.target, o.tol.residual);
    try {
      s.rho = solve_representation(p, constraints, opt);
    } catch (const SolverError& e) {
      s.error = e.reason();
    }
    out[i] = s;
  });
  return out;
}

int cmd_alexander(const Options& o) {
  const QLaurent d = alexander(load_presentation(o));
  Json j{{"alexander", to_json(d)}, {"simple_root", has_simple_root(d).has_simple_root}};
  emit(o, j, d.to_string() + "\n");
  return 0;
}

template <class F>
int print_twisted(const Options& o, const Presentation& p, const Representation<F>& rho) {
  std::optional<int> column;
  if (o.column >= 0) column = o.column;
  const auto ta = wada_invariant(p, rho, column, o.tol);
  const int bound = ta.is_polynomial() ? genus_lower_bound(ta) : -1;
  Json j = to_json(ta, bound);
  std::ostringstream text;
  if (ta.is_polynomial()) {
    text << ta.polynomial->to_string() << "\n";
  } else {
    text << "(" << ta.value.num.to_string() << ") / (" << ta.value.den.to_string() << ")\n";
  }
  text << "degree " << ta.degree << ", leading " << coeff_string(ta.leading) << (ta.monic ? ", monic" : ", not monic") << "\n";
  emit(o, j, text.str());
  return 0;
}

int cmd_twisted(const Options& o) {
  const Presentation p = load_presentation(o);
  const int given = (!o.rep.empty()) + (!o.constraints.empty()) + (!o.lambda.empty());
  if (given != 1) throw ParseError("bad_arguments", "give exactly one of --rep, --constraints, --lambda");
  if (!o.lambda.empty()) return print_twisted(o, p, abelian_rep(p, parse_rational(o.lambda)));
  if (!o.rep.empty()) {
    auto any = parse_representation(read_file(o.rep));
    return std::visit([&](const auto& rho) { return print_twisted(o, p, measured(rho, p)); }, any);
  }
  ConstraintSet cs = parse_constraints(read_file(o.constraints), p);
  if (cs.sweep) {
    auto m = meridian_constraints(p, cs.sweep->from);
    cs.traces.insert(cs.traces.end(), m.begin(), m.end());
  }
  SolveOptions opt;
  opt.seed = o.seed;
  return print_twisted(o, p, solve_representation(p, cs.traces, opt));
}

int cmd_monic_scan(const Options& o) {
  const Presentation p = load_presentation(o);
  if (o.constraints.empty()) throw ParseError("bad_arguments", "monic-scan needs --constraints with a sweep line");
  const auto samples = sweep_samples(p, parse_constraints(read_file(o.constraints), p), o);
  Json rows = Json::array();
  int hits = 0, solved = 0;
  std::ostringstream text;
  for (const auto& s : samples) {
    Json row{{"y", complex_json(s.y)}};
    text << "y=" << coeff_string(s.y) << "  ";
    if (!s.rho) {
      row["error"] = s.error;
      text << "unsolved (" << s.error << ")\n";
    } else {
      ++solved;
      const auto ta = wada_invariant(p, *s.rho, std::nullopt, o.tol);
      hits += ta.monic;
      row["residual"] = s.rho->residual;
      row["degree"] = ta.degree;
      row["leading"] = complex_json(to_complex(ta.leading));
      row["monic"] = ta.monic;
      text << "degree " << ta.degree << "  leading " << coeff_string(ta.leading) << (ta.monic ? "  MONIC" : "") << "\n";
    }
    rows.push_back(row);
  }
  text << solved << " solved, " << hits << " monic\n";
  emit(o, Json{{"samples", rows}, {"solved", solved}, {"monic", hits}}, text.str());
  return 0;
}

int cmd_genus(const Options& o) {
  const Presentation p = load_presentation(o);
  if (o.genus < 1) throw ParseError("bad_arguments", "genus needs --genus g with g >= 1");
  std::vector<Sample> samples;
  if (!o.rep.empty()) {
    auto any = parse_representation(read_file(o.rep));
    Sample s;
    s.rho = std::visit([&](const auto& rho) {
      CRepresentation c;
      for (const auto& m : rho.images) c.images.push_back(to_complex(m));
      return measured(c, p);
    }, any);
    samples.push_back(s);
  } else if (!o.constraints.empty()) {
    samples = sweep_samples(p, parse_constraints(read_file(o.constraints), p), o);
  } else {
    throw ParseError("bad_arguments", "genus needs --rep or --constraints");
  }
  const QLaurent delta = alexander(p);
  Json rows = Json::array();
  int determining = 0, solved = 0;
  std::ostringstream text;
  text << "Alexander degree " << delta.span() << ", target twisted degree " << 4 * o.genus - 2 << "\n";
  for (const auto& s : samples) {
    Json row{{"y", complex_json(s.y)}};
    if (!s.rho) {
      row["error"] = s.error;
    } else {
      ++solved;
      const auto ta = wada_invariant(p, *s.rho, std::nullopt, o.tol);
      const auto gd = determines_genus(ta, o.genus);
      determining += gd.determines;
      row["degree"] = ta.degree;
      row["determines_genus"] = gd.determines;
      row["genus_lower_bound"] = ta.is_polynomial() ? genus_lower_bound(ta) : -1;
      text << "y=" << coeff_string(s.y) << "  degree " << ta.degree << (gd.determines ? "  determines genus" : "") << "\n";
    }
    rows.push_back(row);
  }
  text << determining << " of " << solved << " determine the genus\n";
  emit(o, Json{{"genus", o.genus}, {"alexander_degree", delta.span()}, {"samples", rows}, {"determining", determining}, {"solved", solved}},
       text.str());
  return 0;
}

int cmd_signature(const Options& o) {
  if (o.seifert.empty()) throw ParseError("bad_arguments", "signature needs --seifert");
  const SeifertMatrix v = parse_seifert(read_file(o.seifert));
  const QLaurent delta = v.alexander();
  Json j{{"alexander", to_json(delta)}};
  std::ostringstream text;
  text << "det(V - tV^T) = " << delta.to_string() << "\n";
  if (!o.omega.empty()) {
    const Complex w = parse_complex(o.omega);
    const auto s = lt_signature(v, w);
    const Rational avg = averaged_signature(v, w);
    j["omega"] = complex_json(w);
    j["signature"] = s.value;
    j["nullity"] = s.nullity;
    j["averaged"] = rational_string(avg);
    text << "sigma(" << coeff_string(w) << ") = " << s.value << " (nullity " << s.nullity << "), averaged " << avg.get_str() << "\n";
  }
  Json jumps = Json::array();
  for (const auto& jp : signature_jumps(v, delta)) {
    jumps.push_back(Json{{"angle", jp.angle}, {"jump", jp.jump}, {"multiplicity", jp.multiplicity}});
    text << "jump " << jp.jump << " at angle " << jp.angle << "\n";
  }
  const bool zero = is_identically_zero(v, delta);
  j["jumps"] = jumps;
  j["identically_zero"] = zero;
  text << (zero ? "signature function is identically zero\n" : "signature function is not identically zero\n");
  emit(o, j, text.str());
  return 0;
}

int cmd_satellite(const Options& o) {
  if (o.pattern.empty() || o.companion.empty()) throw ParseError("bad_arguments", "satellite needs --pattern and --companion");
  const QLaurent d = satellite_alexander(load_polynomial(o.pattern), load_polynomial(o.companion), o.winding);
  emit(o, Json{{"alexander", to_json(d)}, {"winding", o.winding}}, d.to_string() + "\n");
  return 0;
}

Json census_json(const CensusResult& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) {
    w.push_back(Json{{"y", complex_json(x.y)}, {"z", complex_json(x.z)}, {"multiplicity", x.multiplicity},
                     {"curve_residual", x.curve_residual}, {"constraint_residual", x.constraint_residual}});
  }
  Json j{{"value", complex_json(c.value)}};
  if (c.identically_satisfied) {
    j["count"] = "identically-satisfied";
  } else {
    j["count"] = c.count;
  }
  j["witnesses"] = w;
  return j;
}

int cmd_pretzel(const Options& o) {
  std::ostringstream text;
  Json j;
  const Presentation p = pretzel_presentation();
  const QLaurent delta = alexander(p);
  j["alexander"] = to_json(delta);
  text << "Alexander polynomial: " << delta.to_string() << "\n";

  const auto factors = hlm_r6_factors();
  const MultiPoly r6 = hlm_r(6);
  if (!(r6 == factors[0] * factors[1])) throw CertificationError("r6_mismatch", "r_6 does not factor as expected");
  j["r6"] = {{"factors", {to_json(factors[0]), to_json(factors[1])}}, {"certified", true}};
  text << "r_6 = (" << factors[0].to_string() << ") * (" << factors[1].to_string() << ")\n";

  const Elimination elim = eliminate_w();
  const PlaneCurve c = curve_C(), cp = curve_C_prime();
  j["elimination"] = {{"resultant", to_json(elim.resultant)}, {"scalar", rational_string(elim.scalar)}};
  j["curves"] = {{"C", to_json(c.polynomial)}, {"C'", to_json(cp.polynomial)}};
  text << "Res_w = " << elim.scalar.get_str() << " * (C)^2 * (C')\n  C : " << c.polynomial.to_string() << "\n  C': "
       << cp.polynomial.to_string() << "\n";

  const Psi2Certificate cert = certify_psi2(12, o.seed);
  Json samples = Json::array();
  for (const auto& s : cert.samples) {
    samples.push_back(Json{{"curve", s.curve}, {"y", complex_json(s.y)}, {"z", complex_json(s.z)}, {"det_A", complex_json(s.det_a)},
                           {"deviation", s.deviation}, {"trace_defect", s.trace_defect}, {"residual", s.residual}});
  }
  j["psi2"] = {{"polynomial", to_json(cert.psi2)}, {"variable", "x = y^2 - z"}, {"samples", samples},
               {"max_deviation", cert.max_deviation}, {"max_trace_defect", cert.max_trace_defect},
               {"max_deviation_on_C_from_18", cert.max_deviation_on_C_from_18}};
  text << "psi_2 = " << cert.psi2.to_string("x") << ", certified at " << cert.samples.size() << " points (max deviation "
       << cert.max_deviation << ")\n";

  const CensusResult monic = census(cp, Rational(1), o.tol);
  const CensusResult degenerate = census(cp, Rational(0), o.tol);
  const CensusResult on_c = census(c, Rational(18), o.tol);
  j["censuses"] = {{"monic", census_json(monic)}, {"non_genus", census_json(degenerate)}, {"C", census_json(on_c)}};
  j["summary"] = {{"monic", monic.count}, {"non-genus", degenerate.count},
                  {"C", on_c.identically_satisfied ? "identically 18" : "not constant"}};
  text << "monic characters on C': " << monic.count << "\ncharacters on C' not determining the genus: " << degenerate.count
       << "\npsi_2 on C: " << (on_c.identically_satisfied ? "identically 18" : "not constant") << "\n";

  Json loop = Json::array();
  bool all_monic = true;
  for (const auto& l : closed_loop(monic, o.seed)) {
    all_monic = all_monic && l.monic;
    loop.push_back(Json{{"y", complex_json(l.witness.y)}, {"z", complex_json(l.witness.z)}, {"residual", l.residual},
                        {"leading", complex_json(l.leading)}, {"degree", l.degree}, {"monic", l.monic}});
  }
  j["closed_loop"] = loop;
  if (!all_monic) throw CertificationError("closed_loop", "a monic census witness gave a non-monic twisted invariant");
  text << "closed loop: all " << loop.size() << " monic witnesses give monic twisted invariants\n";
  emit(o, j, text.str());
  return 0;
}

int fail(const std::string& reason, const std::string& message, int code) {
  std::cerr << Json{{"reason", reason}, {"message", message}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"twisted Alexander polynomials and character-curve censuses"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--pres", o.pres, "presentation file");
    sub->add_option("--pd", o.pd, "PD code file");
    sub->add_option("--seed", o.seed, "solver seed");
    sub->add_option("--tol-clean", o.tol.clean, "coefficient cleanup epsilon")->check(CLI::PositiveNumber);
    sub->add_option("--tol-cluster", o.tol.cluster, "root clustering radius")->check(CLI::PositiveNumber);
    sub->add_option("--tol-residual", o.tol.residual, "residual bound")->check(CLI::PositiveNumber);
    sub->add_option("--report", o.report, "write the JSON report to this file");
    sub->add_flag("--json", o.json, "print JSON instead of text");
  };
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  auto* twisted = app.add_subcommand("twisted", "twisted Alexander invariant");
  auto* scan = app.add_subcommand("monic-scan", "sweep the meridian trace and report monic invariants");
  auto* genus = app.add_subcommand("genus", "degree census against 4g-2");
  auto* sig = app.add_subcommand("signature", "Levine-Tristram signature");
  auto* sat = app.add_subcommand("satellite", "Alexander polynomial of a satellite");
  auto* pretzel = app.add_subcommand("pretzel935", "character curves of the (-3,-3,-3) pretzel knot");
  for (auto* s : {alex, twisted, scan, genus, sig, sat, pretzel}) common(s);
  for (auto* s : {twisted, scan, genus}) s->add_option("--constraints", o.constraints, "trace constraint file");
  for (auto* s : {twisted, genus}) s->add_option("--rep", o.rep, "representation file (JSON)");
  twisted->add_option("--lambda", o.lambda, "rational lambda for the diagonal representation");
  twisted->add_option("--column", o.column, "index of the removed generator column");
  genus->add_option("--genus", o.genus, "knot genus g");
  sig->add_option("--seifert", o.seifert, "Seifert matrix file");
  sig->add_option("--omega", o.omega, "point on the unit circle, 're' or 're,im'");
  sat->add_option("--pattern", o.pattern, "pattern Alexander polynomial file");
  sat->add_option("--companion", o.companion, "companion Alexander polynomial file");
  sat->add_option("--winding", o.winding, "winding number");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("bad_arguments", e.what(), 1);
  }

  try {
    if (*alex) return cmd_alexander(o);
    if (*twisted) return cmd_twisted(o);
    if (*scan) return cmd_monic_scan(o);
    if (*genus) return cmd_genus(o);
    if (*sig) return cmd_signature(o);
    if (*sat) return cmd_satellite(o);
    if (*pretzel) return cmd_pretzel(o);
  } catch (const talex::Error& e) {
    return fail(e.reason(), e.what(), e.exit_code());
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 6);
  }
  return 1;
}
