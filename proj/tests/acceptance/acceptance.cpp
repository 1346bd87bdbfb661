// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <string>

#include "oracles.hpp"

using namespace talex;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    out.pass = false;
    out.detail += " (over time budget)";
  }
  failures += !out.pass;
  std::cout << (out.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << name << "  [" << std::fixed
            << std::setprecision(2) << secs << "s] " << out.detail << "\n";
}

Outcome alexander_fixtures() {
  const QLaurent a = alexander(oracle::fixture_presentation("9_35"));
  const QLaurent b = alexander(oracle::fixture_presentation("8_20"));
  const QLaurent c = alexander(oracle::fixture_presentation("3_1"));
  const bool ok = a == parse_laurent("7t^2 - 13t + 7") && b == parse_laurent("(t^2 - t + 1)^2") && c == parse_laurent("t^2 - t + 1");
  return {ok, a.to_string() + "; " + b.to_string() + "; " + c.to_string()};
}

Outcome r6_factorization() {
  const auto f = hlm_r6_factors();
  const MultiPoly p = hlm_r(6).times_monomial("y1", 5);
  auto q = exact_divide(p, f[0].times_monomial("y1", 5));
  const bool ok = q.has_value() && *q == f[1] && hlm_r(6) == f[0] * f[1];
  return {ok, ok ? "exact quotient, zero remainder" : "factorization mismatch"};
}

Outcome elimination() {
  const Elimination e = eliminate_w();
  return {true, "scalar " + rational_string(e.scalar)};
}

Outcome psi2() {
  const Psi2Certificate cert = certify_psi2(12, 0);
  std::size_t on_c = 0, on_cp = 0;
  for (const auto& s : cert.samples) (s.curve == "C" ? on_c : on_cp)++;
  const bool ok = cert.samples.size() >= 20 && on_c > 0 && on_cp > 0 && cert.max_deviation <= 1e-6 &&
                  cert.max_deviation_on_C_from_18 <= 1e-6 && cert.max_trace_defect <= 1e-6;
  std::ostringstream os;
  os << cert.samples.size() << " samples (" << on_c << " on C, " << on_cp << " on C'), max |det A - psi2| "
     << std::scientific << std::setprecision(1) << cert.max_deviation << ", max |det A - 18| on C " << cert.max_deviation_on_C_from_18;
  return {ok, os.str()};
}

Outcome censuses() {
  const auto monic = census(curve_C_prime(), Rational(1));
  const auto degenerate = census(curve_C_prime(), Rational(0));
  const auto on_c = census(curve_C(), Rational(18));
  const bool ok = !monic.identically_satisfied && monic.count == 6 && degenerate.count == 2 && on_c.identically_satisfied;
  return {ok, "monic " + std::to_string(monic.count) + ", non-genus " + std::to_string(degenerate.count) +
                  (on_c.identically_satisfied ? ", C identically 18" : ", C not constant")};
}

Outcome closed_loop_check() {
  const auto loop = closed_loop(census(curve_C_prime(), Rational(1)));
  double worst = 0, worst_res = 0;
  for (const auto& l : loop) {
    worst = std::max(worst, std::abs(l.leading - 1.0));
    worst_res = std::max(worst_res, l.residual);
  }
  std::ostringstream os;
  os << loop.size() << " witnesses, max |leading - 1| " << std::scientific << std::setprecision(1) << worst << ", max residual "
     << worst_res;
  return {loop.size() == 6 && worst <= 1e-5 && worst_res <= 1e-8, os.str()};
}

Outcome fiberedness() {
  const auto p = oracle::fixture_presentation("3_1");
  int good = 0;
  for (int i = 0; i < 20; ++i) {
    SolveOptions opt;
    opt.seed = static_cast<std::uint64_t>(i);
    const Complex y(0.2 + 0.09 * i, 0.8 - 0.07 * i);
    const auto rho = solve_representation(p, meridian_constraints(p, y), opt);
    const auto ta = wada_invariant(p, rho);
    good += !is_reducible(rho) && ta.is_polynomial() && ta.monic && ta.degree == 2 && determines_genus(ta, 1).determines;
  }
  return {good == 20, std::to_string(good) + "/20 monic of degree 2"};
}

Outcome reducible_oracle() {
  std::mt19937_64 rng(2024);
  int checked = 0, agreed = 0;
  for (const char* knot : {"3_1", "9_35", "8_20"}) {
    const auto p = oracle::fixture_presentation(knot);
    const QLaurent delta = alexander(p);
    for (int i = 0; i < 10; ++i) {
      Rational lambda = oracle::random_rational(rng, 9);
      if (lambda == 0) lambda = Rational(7, 2);
      const auto ta = wada_invariant(p, abelian_rep(p, lambda));
      const auto expect = reducible_formula(delta, lambda);
      ++checked;
      agreed += ta.value.num.normalized() == expect.value.num.normalized() && ta.value.den.normalized() == expect.value.den.normalized();
    }
  }
  return {agreed == checked, std::to_string(agreed) + "/" + std::to_string(checked) + " exact agreements"};
}

Outcome fox_identity() {
  auto lhs = [](const FreeWord& w, int n) {
    GroupRingElement total;
    for (int j = 0; j < n; ++j) total += fox_derivative(w, j) * (GroupRingElement(FreeWord::generator(j)) - GroupRingElement::one());
    return total;
  };
  int words = 0, ok = 0;
  for (const char* knot : {"3_1", "9_35", "8_20"}) {
    const auto p = oracle::fixture_presentation(knot);
    for (const auto& r : p.relators) {
      ++words;
      ok += lhs(r, p.generator_count()) == GroupRingElement(r) - GroupRingElement::one();
    }
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const FreeWord w = oracle::random_word(rng, 4, 1 + i % 20);
    ++words;
    ok += lhs(w, 4) == GroupRingElement(w) - GroupRingElement::one();
  }
  // column independence on every fixture
  int columns = 0, same = 0;
  for (const char* knot : {"3_1", "9_35", "8_20"}) {
    const auto p = oracle::fixture_presentation(knot);
    SolveOptions opt;
    opt.seed = 1;
    const auto rho = solve_representation(p, meridian_constraints(p, {0.7, 0.45}), opt);
    const auto base = wada_invariant(p, rho, 0);
    const auto exact = wada_invariant(p, abelian_rep(p, Rational(3, 2)), 0);
    for (int k = 1; k < p.generator_count(); ++k) {
      const auto ta = wada_invariant(p, rho, k);
      const auto ex = wada_invariant(p, abelian_rep(p, Rational(3, 2)), k);
      columns += 2;
      same += ta.is_polynomial() && base.is_polynomial() && (*ta.polynomial - *base.polynomial).max_norm() <= 1e-8;
      same += ex.value.num.normalized() == exact.value.num.normalized() && ex.value.den == exact.value.den;
    }
  }
  return {ok == words && same == columns,
          std::to_string(ok) + "/" + std::to_string(words) + " identities, " + std::to_string(same) + "/" + std::to_string(columns) +
              " column checks"};
}

Outcome signature() {
  const SeifertMatrix tre = parse_seifert(oracle::fixture("3_1.seifert"));
  const SeifertMatrix k820 = parse_seifert(oracle::fixture("8_20.seifert"));
  bool ok = lt_signature(tre, -1.0).value == -2 && lt_signature(tre, 1.0).value == 0 && lt_signature(k820, 1.0).value == 0;
  int samples = 0;
  for (const auto* v : {&tre, &k820}) {
    const QLaurent d = v->alexander();
    for (int k = 0; k < 100; ++k) {
      const Complex w = std::polar(1.0, 2 * std::numbers::pi * (k + 0.5) / 100.0);
      if (std::abs(d.evaluate_complex(w)) < 1e-9) continue;
      ++samples;
      ok = ok && lt_signature(*v, w).value % 2 == 0;
    }
  }
  const bool zero820 = is_identically_zero(k820, parse_laurent(oracle::fixture("8_20.alex")));
  const bool zero31 = is_identically_zero(tre, parse_laurent(oracle::fixture("3_1.alex")));
  ok = ok && zero820 && !zero31;
  return {ok, "sigma(-1) = " + std::to_string(lt_signature(tre, -1.0).value) + ", " + std::to_string(samples) +
                  " even samples, 8_20 identically zero: " + (zero820 ? "yes" : "no") + ", 3_1: " + (zero31 ? "yes" : "no")};
}

Outcome symmetry() {
  double worst = 0;
  int samples = 0;
  bool bounded = true;
  for (const char* knot : {"3_1", "9_35"}) {
    const auto p = oracle::fixture_presentation(knot);
    for (int i = 0; i < 10; ++i) {
      SolveOptions opt;
      opt.seed = 500 + static_cast<std::uint64_t>(i);
      const Complex y(1.9 - 0.15 * i, 0.1 + 0.08 * i);
      const auto rho = solve_representation(p, meridian_constraints(p, y), opt);
      const auto ta = wada_invariant(p, rho);
      bounded = bounded && ta.is_polynomial() && ta.degree <= 2;
      const auto prof = coefficient_profile(ta, 1);
      worst = std::max(worst, magnitude(prof.psi[0] - prof.psi[2]));
      ++samples;
    }
  }
  std::ostringstream os;
  os << samples << " samples, max |psi_0 - psi_2| " << std::scientific << std::setprecision(1) << worst;
  return {bounded && worst <= 1e-6, os.str()};
}

}  // namespace

int main() {
  run(1, "Alexander polynomials of 9_35, 8_20, 3_1", 3, alexander_fixtures);
  run(2, "r_6 factorization", 1, r6_factorization);
  run(3, "elimination of w", 10, elimination);
  run(4, "psi_2 certification on C and C'", 30, psi2);
  run(5, "censuses on C' and C", 1, censuses);
  run(6, "closed loop through monic witnesses", 60, closed_loop_check);
  run(7, "trefoil representations are monic of degree 2", 60, fiberedness);
  run(8, "diagonal representations match the reducible formula", 60, reducible_oracle);
  run(9, "Fox fundamental identity and column independence", 60, fox_identity);
  run(10, "Levine-Tristram signatures", 60, signature);
  run(11, "coefficient symmetry and degree bound", 60, symmetry);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
