#include "singular/cli.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "singular/continued_fraction.hpp"
#include "singular/distribution.hpp"
#include "singular/quad_surd.hpp"
#include "singular/rational.hpp"
#include "singular/singular_function.hpp"
#include "singular/stern_brocot.hpp"
#include "singular/xi_tree.hpp"

namespace singular::cli {
namespace {

constexpr unsigned kDecimalDigits = 15;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Parse>
auto parse_flag(std::string_view flag, const std::string& text, Parse&& parse) {
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Rational parse_rational_flag(std::string_view flag, const std::string& text) {
  return parse_flag(flag, text, [](const std::string& t) { return Rational::parse(t); });
}

Rational parse_unit_interval(std::string_view flag, const std::string& text) {
  Rational x = parse_rational_flag(flag, text);
  if (x.sign() < 0 || x > Rational{1}) throw UsageError(std::string(flag) + ": expected p/q in [0, 1], got " + text);
  return x;
}

Rational parse_open_interval(std::string_view flag, const std::string& text) {
  Rational x = parse_rational_flag(flag, text);
  if (x.sign() <= 0 || x >= Rational{1}) throw UsageError(std::string(flag) + ": expected p/q in (0, 1), got " + text);
  return x;
}

// p/q or a decimal literal.
Rational parse_tolerance(std::string_view flag, const std::string& text) {
  Rational value = parse_flag(flag, text, [](const std::string& t) {
    if (t.find('/') != std::string::npos) return Rational::parse(t);
    return Rational::parse_decimal(t);
  });
  if (value.sign() <= 0) throw UsageError(std::string(flag) + ": expected a positive value, got " + text);
  return value;
}

Lambda parse_lambda(const std::string& text) {
  return parse_flag("--lambda", text, [](const std::string& t) { return Lambda::parse(t); });
}

void emit_value(std::ostream& out, const GValue& value) {
  out << to_string(value) << '\t' << to_decimal(value, kDecimalDigits) << '\n';
}

void check_cap(std::string_view what, unsigned value, unsigned cap, std::string_view cap_flag) {
  if (value > cap) {
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " exceeds " + std::string(cap_flag) +
                     " = " + std::to_string(cap));
  }
}

void emit_nodes(std::ostream& out, const std::vector<Rational>& elems, const std::vector<unsigned>& levels) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out << elems[i].numerator() << '\t' << elems[i].denominator() << '\t' << levels[i] << '\n';
  }
}

int cmd_eval(const std::string& lambda_text, const std::string& x_text, const std::string& route,
             std::ostream& out) {
  Lambda lambda = parse_lambda(lambda_text);
  Rational x = parse_unit_interval("--x", x_text);
  if (route == "inductive") {
    emit_value(out, g_inductive(x, lambda));
  } else if (route == "series") {
    emit_value(out, g_series(x, lambda));
  } else if (route == "tau2") {
    if (!(lambda.value() == GValue(QuadSurd::tau_squared()))) {
      throw UsageError("--route tau2 requires --lambda tau2");
    }
    emit_value(out, g_tau2(x));
  } else if (route == "salem") {
    if (!(lambda.value() == GValue(Rational(1, 2)))) throw UsageError("--route salem requires --lambda 1/2");
    emit_value(out, x.is_zero() ? Rational{0} : question_mark(expand_rcf(x)));
  } else {
    throw UsageError("--route: expected inductive|series|tau2|salem, got " + route);
  }
  return kExitOk;
}

int cmd_eval_stream(const std::string& lambda_text, const std::string& epsilon_text, unsigned digits,
                    std::istream& in, std::ostream& out) {
  Lambda lambda = parse_lambda(lambda_text);
  Rational epsilon = parse_tolerance("--epsilon", epsilon_text);
  std::size_t position = 0;
  QuotientStream stream = [&]() -> std::optional<Digit> {
    std::string token;
    if (!(in >> token)) return std::nullopt;
    ++position;
    Digit value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
      throw UsageError("stdin: quotient #" + std::to_string(position) + " '" + token +
                       "' is not a positive integer");
    }
    return value;
  };
  GEnclosure enclosure = g_stream(stream, lambda, epsilon);
  out << to_decimal(enclosure.lower, digits) << '\t' << to_decimal(enclosure.upper, digits) << '\t'
      << enclosure.terms << '\n';
  return kExitOk;
}

int cmd_question_mark(const std::string& x_text, std::ostream& out) {
  Rational value;
  if (x_text.starts_with("[")) {
    RegularCF cf = parse_flag("--x", x_text, [](const std::string& t) { return RegularCF::parse(t); });
    value = question_mark(cf);
  } else {
    Rational x = parse_unit_interval("--x", x_text);
    value = x.is_zero() ? Rational{0} : question_mark(expand_rcf(x));
  }
  emit_value(out, value);
  return kExitOk;
}

int cmd_stern_brocot(unsigned n, unsigned cap, bool new_only, std::ostream& out) {
  check_cap("--n", n, cap, "--max-n");
  std::vector<Rational> elems;
  if (new_only) {
    if (n == 0) throw UsageError("--new-only: Q_n needs --n >= 1");
    elems = new_mediants(n);
  } else {
    elems = stern_brocot_level(n).elements();
  }
  for (const auto& e : elems) out << e.numerator() << '\t' << e.denominator() << '\n';
  return kExitOk;
}

int cmd_xi(unsigned n, unsigned cap, std::ostream& out) {
  if (n == 0) throw UsageError("--n: Xi_n needs n >= 1");
  check_cap("--n", n, cap, "--max-depth");
  XiSequence seq = xi(n);
  emit_nodes(out, seq.elements(), seq.levels());
  return kExitOk;
}

int cmd_theta(unsigned k, unsigned cap, std::ostream& out) {
  if (k == 0) throw UsageError("--k: Theta_k needs k >= 1");
  check_cap("--k", k, cap, "--max-depth");
  for (const auto& node : theta(k)) {
    out << node.value().numerator() << '\t' << node.value().denominator() << '\t' << node.level() << '\n';
  }
  return kExitOk;
}

int cmd_convert_cf(const std::string& x_text, const std::string& cf_text, std::ostream& out) {
  if (x_text.empty() == cf_text.empty()) throw UsageError("convert-cf: give exactly one of --x or --cf");
  Rational x;
  if (!x_text.empty()) {
    x = parse_open_interval("--x", x_text);
  } else {
    x = parse_flag("--cf", cf_text, [](const std::string& t) {
      if (t.starts_with("[[")) return value_rrcf(ReducedRCF::parse(t));
      return value_rcf(RegularCF::parse(t));
    });
    if (x >= Rational{1}) throw UsageError("--cf: the value 1 has no reduced expansion");
    out << x << '\n';
  }
  out << expand_rcf(x).str() << '\n' << expand_rrcf(x).str() << '\n';
  return kExitOk;
}

int cmd_verify_theorem1(const std::string& x_text, unsigned n_max, const std::string& tol_text,
                        std::ostream& out) {
  Rational x = parse_open_interval("--x", x_text);
  Rational tol = parse_tolerance("--tol", tol_text);
  if (n_max < 2 || n_max > kMaxMaterializedXi) {
    throw UsageError("--n-max: expected an integer in [2, " + std::to_string(kMaxMaterializedXi) + "], got " +
                     std::to_string(n_max));
  }
  Theorem1Report report = verify_theorem1(x, n_max, tol);
  out << "n\tempirical\tempirical_decimal\ttarget_decimal\tabs_error\n";
  for (const auto& row : report.rows) {
    out << row.n << '\t' << row.empirical << '\t' << to_decimal(row.empirical, 30) << '\t'
        << to_decimal(row.target, 30) << '\t' << row.abs_error_decimal << '\n';
  }
  const auto& last = report.rows.back();
  out << (report.passed ? "PASS" : "FAIL") << "\tx=" << x << "\tn=" << last.n << "\terror=" << last.abs_error_decimal
      << "\ttol=" << tol_text << '\n';
  return report.passed ? kExitOk : kExitFail;
}

int cmd_plot_data(const std::string& lambda_text, unsigned grid, unsigned cap, std::ostream& out) {
  if (grid == 0) throw UsageError("--grid: expected an integer >= 1");
  check_cap("--grid", grid, cap, "--max-depth");
  Lambda lambda = parse_lambda(lambda_text);
  XiSequence seq = xi(grid);
  out << "x\tx_decimal\tg_decimal\n";
  for (const auto& x : seq.elements()) {
    out << x << '\t' << to_decimal(x, kDecimalDigits) << '\t' << to_decimal(g_series(x, lambda), kDecimalDigits)
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of the singular functions g_lambda, Stern-Brocot and Xi_n sequences."};
  app.name("singular");
  app.require_subcommand(1);

  std::string lambda_text;
  std::string x_text;
  std::string cf_text;
  std::string route = "series";
  std::string epsilon_text = "1e-15";
  std::string tol_text = "0.02";
  unsigned n = 0;
  unsigned k = 0;
  unsigned n_max = 25;
  unsigned grid = 10;
  unsigned digits = kDecimalDigits;
  unsigned sb_cap = 22;
  unsigned depth_cap = 25;
  bool new_only = false;

  auto* eval = app.add_subcommand("eval", "Evaluate g_lambda(x) exactly. Output: exact<TAB>decimal");
  eval->add_option("--lambda", lambda_text, "p/q, tau, tau2 or a+b√5, strictly inside (0,1)")->required();
  eval->add_option("--x", x_text, "p/q in [0,1]")->required();
  eval->add_option("--route", route, "inductive|series|tau2|salem")->capture_default_str();

  auto* stream = app.add_subcommand(
      "eval-stream", "Enclose g_lambda(x) from whitespace-separated partial quotients on stdin. "
                     "Output: lower<TAB>upper<TAB>terms_used");
  stream->add_option("--lambda", lambda_text, "p/q, tau, tau2 or a+b√5")->required();
  stream->add_option("--epsilon", epsilon_text, "enclosure width, decimal or p/q")->capture_default_str();
  stream->add_option("--digits", digits, "decimal digits printed")->capture_default_str();

  auto* qm = app.add_subcommand("question-mark", "Minkowski ?(x) by Salem's series. Output: exact<TAB>decimal");
  qm->add_option("--x", x_text, "p/q in [0,1] or [0;a1,a2,...]")->required();

  auto* sb = app.add_subcommand("stern-brocot", "Emit F_n (or Q_n with --new-only). Output rows: p<TAB>q");
  sb->add_option("--n", n, "level index")->required();
  sb->add_flag("--new-only", new_only, "emit only the new mediants Q_n");
  sb->add_option("--max-n", sb_cap, "largest level allowed")->capture_default_str();

  auto* xi_cmd = app.add_subcommand("xi", "Emit Xi_n. Output rows: p<TAB>q<TAB>level (level 0 marks 0 and 1)");
  xi_cmd->add_option("--n", n, "sequence index >= 1")->required();
  xi_cmd->add_option("--max-depth", depth_cap, "largest index allowed")->capture_default_str();

  auto* theta_cmd = app.add_subcommand("theta", "Emit Theta_k. Output rows: p<TAB>q<TAB>level");
  theta_cmd->add_option("--k", k, "family index >= 1")->required();
  theta_cmd->add_option("--max-depth", depth_cap, "largest index allowed")->capture_default_str();

  auto* convert = app.add_subcommand(
      "convert-cf", "Print [0;a1,...] and [[1;b1,...]] for x in (0,1). With --cf the value p/q comes first");
  convert->add_option("--x", x_text, "p/q in (0,1)");
  convert->add_option("--cf", cf_text, "[0;a1,...] or [[1;b1,...]]");

  auto* verify = app.add_subcommand("verify", "Numerical verification");
  verify->require_subcommand(1);
  auto* theorem1 = verify->add_subcommand(
      "theorem1", "Xi_n empirical CDF at x against g_tau2(x). Output: header, rows "
                  "n<TAB>empirical<TAB>empirical_decimal<TAB>target_decimal<TAB>abs_error, then PASS or FAIL");
  theorem1->add_option("--x", x_text, "p/q in (0,1)")->required();
  theorem1->add_option("--n-max", n_max, "largest n")->capture_default_str();
  theorem1->add_option("--tol", tol_text, "tolerance on the final error")->capture_default_str();

  auto* plot = app.add_subcommand("plot-data",
                                  "Emit g_lambda over the points of Xi_grid. Output: header, rows "
                                  "x<TAB>x_decimal<TAB>g_decimal");
  plot->add_option("--lambda", lambda_text, "p/q, tau, tau2 or a+b√5")->default_val("tau2");
  plot->add_option("--grid", grid, "Xi index for the sample points")->capture_default_str();
  plot->add_option("--max-depth", depth_cap, "largest grid index allowed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(lambda_text, x_text, route, out);
    if (*stream) return cmd_eval_stream(lambda_text, epsilon_text, digits, in, out);
    if (*qm) return cmd_question_mark(x_text, out);
    if (*sb) return cmd_stern_brocot(n, sb_cap, new_only, out);
    if (*xi_cmd) return cmd_xi(n, depth_cap, out);
    if (*theta_cmd) return cmd_theta(k, depth_cap, out);
    if (*convert) return cmd_convert_cf(x_text, cf_text, out);
    if (*theorem1) return cmd_verify_theorem1(x_text, n_max, tol_text, out);
    if (*plot) return cmd_plot_data(lambda_text, grid, depth_cap, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace singular::cli
