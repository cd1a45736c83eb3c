// Acceptance suite: one PASS/FAIL line per criterion, each within its
// runtime budget. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "singular/continued_fraction.hpp"
#include "singular/distribution.hpp"
#include "singular/quad_surd.hpp"
#include "singular/singular_function.hpp"
#include "singular/stern_brocot.hpp"
#include "singular/xi_tree.hpp"

using namespace singular;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<Rational> interior(const SternBrocotLevel& level) {
  const auto& e = level.elements();
  return {e.begin() + 1, e.end() - 1};
}

Outcome salem_identity() {
  Outcome o;
  auto points = interior(stern_brocot_level(12));
  if (points.size() != 4095) o.fail("F_12 has " + std::to_string(points.size()) + " interior points");
  for (const auto& x : points) {
    RegularCF cf = expand_rcf(x);
    if (question_mark(cf) != g_series(cf, Rational(1, 2))) o.fail("mismatch at " + x.str());
  }
  if (o.ok) o.detail = "4095 points, exact equality";
  return o;
}

Outcome routes_and_recurrences() {
  Outcome o;
  const std::vector<Rational> lambdas{Rational(1, 3), Rational(1, 2), Rational(2, 5)};
  const SternBrocotLevel f10 = stern_brocot_level(10);
  for (const auto& x : f10.elements()) {
    for (const auto& l : lambdas) {
      if (g_inductive(x, l) != g_series(x, l)) o.fail("g_inductive != g_series at x=" + x.str() + " lambda=" + l.str());
    }
  }
  std::size_t pairs = 0;
  SternBrocotLevel level;
  for (unsigned n = 0; n < 10; ++n) {
    const auto& e = level.elements();
    for (std::size_t j = 1; j < e.size(); ++j) {
      Rational m = mediant(e[j - 1], e[j]);
      for (const auto& l : lambdas) {
        Rational gx = g_series(e[j - 1], l);
        Rational gy = g_series(e[j], l);
        Rational gm = g_series(m, l);
        if (gm != gx + (gy - gx) * l) o.fail("f1 fails at " + m.str());
        if (gm != gy - (gy - gx) * (Rational{1} - l)) o.fail("f2 fails at " + m.str());
      }
      ++pairs;
    }
    level = next_level(level);
  }
  if (o.ok) o.detail = "1025 points x 3 lambdas; f1/f2 on " + std::to_string(pairs) + " neighbour pairs";
  return o;
}

Outcome tau2_specialization() {
  Outcome o;
  const QuadSurd t2 = QuadSurd::tau_squared();
  const SternBrocotLevel f10 = stern_brocot_level(10);
  for (const auto& x : f10.elements()) {
    if (g_series(x, t2) != g_tau2(x)) o.fail("mismatch at " + x.str());
  }
  if (o.ok) o.detail = "1025 points, exact Q(sqrt5) equality";
  return o;
}

Outcome block_conversion() {
  Outcome o;
  for (const auto& x : interior(stern_brocot_level(12))) {
    ReducedRCF converted = rcf_to_rrcf(expand_rcf(x));
    if (value_rrcf(converted) != x) o.fail("value mismatch at " + x.str());
    auto d = converted.digits();
    if (std::vector<Digit>(d.begin(), d.end()) != oracle::ceiling_rrcf(x)) o.fail("digit mismatch at " + x.str());
  }
  if (o.ok) o.detail = "4095 points, values and digits agree";
  return o;
}

Outcome theta_counts() {
  Outcome o;
  std::size_t last = 0;
  for (unsigned n = 1; n <= 25; ++n) {
    last = theta(n).size();
    if (BigInt(last) != fibonacci(n)) o.fail("#Theta_" + std::to_string(n) + " = " + std::to_string(last));
  }
  if (o.ok) o.detail = "#Theta_25 = " + std::to_string(last);
  return o;
}

Outcome children_are_mediants() {
  Outcome o;
  XiSequence seq = xi(1);
  std::size_t checked = 0;
  for (unsigned n = 1; n <= 15; ++n) {
    if (n > 1) seq = extend(seq, theta(n));
    const auto& e = seq.elements();
    for (const auto& y : theta(n)) {
      auto it = std::lower_bound(e.begin(), e.end(), y.value());
      if (it == e.end() || *it != y.value() || it == e.begin() || it + 1 == e.end()) {
        o.fail(y.value().str() + " not interior in Xi_" + std::to_string(n));
        continue;
      }
      XiTreeNode l = left_child(y);
      XiTreeNode r = right_child(y);
      if (l.value() != mediant(*(it - 1), y.value()) || l.level() != n + 2) o.fail("left child of " + y.value().str());
      if (r.value() != mediant(y.value(), *(it + 1)) || r.level() != n + 1) o.fail("right child of " + y.value().str());
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " nodes y in Theta_1..Theta_15";
  return o;
}

Outcome characterization() {
  Outcome o;
  for (unsigned n = 1; n <= 14; ++n) {
    auto expected = oracle::rationals_with_quotient_sum(n + 1);
    std::sort(expected.begin(), expected.end());
    if (new_mediants(n) != expected) o.fail("Q_" + std::to_string(n) + " differs");
  }
  if (o.ok) o.detail = "Q_1..Q_14 equal {x : S(x) = n+1}";
  return o;
}

Outcome counting() {
  Outcome o;
  std::size_t roots = 0;
  for (unsigned k = 1; k <= 10; ++k) {
    for (const auto& root : theta(k)) {
      auto per_level = subtree_level_counts(root, 25);
      std::uint64_t cumulative = 0;
      for (unsigned m = k; m <= 25; ++m) {
        cumulative += per_level[m];
        if (cumulative != oracle::fibonacci_u64(m - k + 3) - 1) {
          o.fail("subtree of " + root.value().str() + " through level " + std::to_string(m));
        }
        if (BigInt(cumulative) != subtree_count(k, m)) o.fail("subtree_count(" + std::to_string(k) + ", " + std::to_string(m) + ")");
      }
      ++roots;
    }
  }
  XiSequence seq = xi(1);
  for (unsigned n = 1; n <= 25; ++n) {
    if (n > 1) seq = extend(seq, theta(n));
    if (seq.size() != oracle::fibonacci_u64(n + 2) + 1) o.fail("#Xi_" + std::to_string(n) + " = " + std::to_string(seq.size()));
  }
  if (o.ok) o.detail = std::to_string(roots) + " roots through level 25; #Xi_25 = " + std::to_string(seq.size());
  return o;
}

Outcome xi_convergence() {
  Outcome o;
  const QuadSurd tau = QuadSurd::tau();
  const Rational tolerance(1, 50);
  struct Case {
    Rational x;
    QuadSurd target;
  };
  const std::vector<Case> cases{{Rational(1, 3), quad_pow(tau, 4)},
                                {Rational(1, 2), quad_pow(tau, 2)},
                                {Rational(2, 3), tau},
                                {Rational(3, 4), QuadSurd{1} - quad_pow(tau, 3)}};
  std::ostringstream summary;
  for (const auto& c : cases) {
    if (g_tau2(c.x) != c.target) o.fail("g_tau2(" + c.x.str() + ") is not the expected surd");
    Theorem1Report report = verify_theorem1(c.x, 25, tolerance);
    QuadSurd previous;
    bool first = true;
    for (unsigned n : {10U, 15U, 20U, 25U}) {
      const Theorem1Row& row = report.rows[n - 2];
      if (row.target != c.target) o.fail("target mismatch");
      if (!first && previous < row.abs_error) o.fail("error grows at n=" + std::to_string(n) + " for x=" + c.x.str());
      previous = row.abs_error;
      first = false;
    }
    if (!report.passed || QuadSurd(tolerance) < report.rows.back().abs_error) {
      o.fail("x=" + c.x.str() + " error " + report.rows.back().abs_error_decimal + " > 0.02");
    }
    summary << c.x << ':' << to_decimal(report.rows.back().abs_error, 8) << ' ';
  }
  if (o.ok) o.detail = "errors at n=25 " + summary.str();
  return o;
}

Outcome fibonacci_ratio() {
  Outcome o;
  const QuadSurd t2 = QuadSurd::tau_squared();
  auto error = [&](unsigned j) { return (QuadSurd(fibonacci_ratio_limit(j)) - t2).abs(); };
  for (unsigned j = 2; j <= 40; ++j) {
    if (!(error(j) < error(j - 1))) o.fail("not strictly decreasing at j=" + std::to_string(j));
  }
  QuadSurd e40 = error(40);
  if (!(e40 < QuadSurd(Rational::parse_decimal("1e-15")))) o.fail("|F40/F42 - tau^2| = " + to_decimal(e40, 30));
  unsigned k = 3;  // level of 0 (+) 1/2 = 1/3
  Rational ratio = mediant_ratio(Rational{0}, Rational(1, 2), 1, k + 30);
  QuadSurd ratio_error = (QuadSurd(ratio) - t2).abs();
  if (!(ratio_error <= QuadSurd(Rational::parse_decimal("1e-4")))) o.fail("mediant ratio error " + to_decimal(ratio_error, 30));
  if (o.ok) o.detail = "|F40/F42 - tau^2| = " + to_decimal(e40, 30) + ", mediant ratio error " + to_decimal(ratio_error, 15);
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 Salem identity on F_12", 5, salem_identity},
      {"AC2 inductive = series, recurrences f1/f2 on F_10", 10, routes_and_recurrences},
      {"AC3 tau^2 specialization on F_10", 10, tau2_specialization},
      {"AC4 regular-to-reduced conversion on F_12", 5, block_conversion},
      {"AC5 #Theta_n = F_n for n <= 25", 30, theta_counts},
      {"AC6 children are neighbour mediants, n <= 15", 30, children_are_mediants},
      {"AC7 Q_n = {S(x) = n+1}, n <= 14", 20, characterization},
      {"AC8 subtree sizes and #Xi_n", 30, counting},
      {"AC9 Xi_n empirical CDF converges to g_tau2", 60, xi_convergence},
      {"AC10 Fibonacci ratio and mediant ratio limits", 5, fibonacci_ratio},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.budget_seconds) o.fail("over budget");
    if (!o.ok) ++failures;
    std::printf("[%s] %s (%.2fs / %.0fs) %s\n", o.ok ? "PASS" : "FAIL", c.name, seconds, c.budget_seconds,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
