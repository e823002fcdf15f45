#include "cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "weinstein/lambda.hpp"
#include "weinstein/orthopoly.hpp"
#include "weinstein/rational.hpp"
#include "weinstein/report.hpp"
#include "weinstein/suites.hpp"

namespace weinstein::cli {

namespace {

/// Usage errors detected after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_u(const std::string& text) {
  Rational u;
  try {
    u = Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--u: ") + e.what());
  }
  if (u.sign() <= 0 || u > Rational(1))
    throw UsageError("--u must satisfy 0 < u <= 1, got " + u.str());
  return u;
}

std::vector<Rational> parse_u_list(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    values.push_back(parse_u(item));
  if (values.empty())
    throw UsageError("--u-list is empty");
  return values;
}

struct EvalArgs {
  unsigned n = 0;
  unsigned k = 0;
  std::optional<std::string> u;
  std::optional<double> t;
  std::string mode = "all";
  std::string format = "csv";
};

struct VerifyArgs {
  std::string suite;
  std::optional<unsigned> max_n;
  std::optional<std::string> u_list;
  std::optional<double> tol;
  bool exact = false;
};

struct TableArgs {
  unsigned n = 0;
  std::string u;
  std::string format = "csv";
};

struct ExpandArgs {
  std::string family;
  unsigned n = 0;
  std::string alpha = "0";
  std::string beta = "0";
  std::string lambda = "1";
  unsigned j = 0;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.k > a.n)
    throw UsageError("--k must not exceed --n");
  std::vector<Representation> reps;
  if (a.mode == "all") {
    reps.assign(std::begin(kClosedRepresentations), std::end(kClosedRepresentations));
  } else {
    try {
      reps.push_back(parse_representation(a.mode));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const EvalPoint point = a.u ? EvalPoint::exact(parse_u(*a.u)) : EvalPoint::floating(*a.t);
  if (!point.is_exact())
    for (auto rep : reps)
      if (rep == Representation::SeriesOracle)
        throw UsageError("mode 'series' needs an exact --u");
  const std::string u_text = point.is_exact() ? point.u().str() : format_double(point.u_double());

  nlohmann::json rows = nlohmann::json::array();
  for (auto rep : reps) {
    const LambdaValue v = lambda(a.n, a.k, point, rep);
    if (a.format == "csv") {
      out << a.n << ',' << a.k << ',' << u_text << ',' << to_string(rep) << ',' << v.str()
          << '\n';
    } else {
      nlohmann::json row = {{"n", a.n}, {"k", a.k}, {"u", u_text}, {"mode", to_string(rep)}};
      if (v.is_exact())
        row["value"] = v.str();
      else
        row["value"] = v.as_double();
      rows.push_back(std::move(row));
    }
  }
  if (a.format == "json")
    out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteOptions options;
  options.max_n = a.max_n;
  if (a.u_list)
    options.u_list = parse_u_list(*a.u_list);
  options.tol = a.tol;
  options.exact_only = a.exact;
  SuiteReport report;
  try {
    report = run_suite(a.suite, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << to_json(report).dump(2) << '\n';
  return report.all_passed() ? kOk : kVerificationFailed;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Rational u = parse_u(a.u);
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned k = 0; k <= a.n; ++k) {
    const AskeyGasperSum sum = lambda_askey_gasper(a.n, k, u);
    for (std::size_t j = 0; j < sum.terms.size(); ++j) {
      if (sum.terms[j].is_zero())
        continue;
      if (a.format == "csv")
        out << a.n << ',' << k << ',' << j << ',' << sum.terms[j] << '\n';
      else
        rows.push_back({{"n", a.n}, {"k", k}, {"j", j}, {"term", sum.terms[j].str()}});
    }
    if (a.format == "csv")
      out << a.n << ',' << k << ",total," << sum.total << '\n';
    else
      rows.push_back({{"n", a.n}, {"k", k}, {"j", "total"}, {"term", sum.total.str()}});
  }
  if (a.format == "json")
    out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  FamilyParams params;
  try {
    params.family = parse_family(a.family);
    params.alpha = Rational::parse(a.alpha);
    params.beta = Rational::parse(a.beta);
    params.lambda = Rational::parse(a.lambda);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  params.order = a.j;
  Poly p;
  bool surd = false;
  try {
    if (params.family == Family::AssocLegendre) {
      const SurdPoly s = assoc_legendre(a.n, params.order);
      p = s.poly();
      surd = s.half_power() == 1;
    } else {
      p = build_family(params, a.n);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (p.is_zero())
    out << "0\n";
  for (const auto& c : p.coeffs())
    out << c << '\n';
  if (surd)
    out << "sqrt(1-x^2)\n";
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weinstein functions: evaluation, tables and identity verification",
               "weinstein"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate Lambda_k^n through one or all representations");
  eval->add_option("--n", eval_args.n, "degree n")->required();
  eval->add_option("--k", eval_args.k, "index k, 0 <= k <= n")->required();
  auto* eval_u = eval->add_option("--u", eval_args.u, "exact u = e^{-t} as p/q, 0 < u <= 1");
  auto* eval_t = eval->add_option("--t", eval_args.t, "float t >= 0")->check(CLI::NonNegativeNumber);
  eval_u->excludes(eval_t);
  eval_t->excludes(eval_u);
  eval->add_option("--mode", eval_args.mode, "jacobi|binomial|hyp3f2|askey-gasper|series|all")
      ->check(CLI::IsMember({"jacobi", "binomial", "hyp3f2", "askey-gasper", "series", "all"}));
  eval->add_option("--format", eval_args.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::vector<std::string> suites(suite_names().begin(), suite_names().end());
  suites.emplace_back("all");
  verify->add_option("--suite", verify_args.suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", verify_args.max_n, "largest degree in the grid");
  verify->add_option("--u-list", verify_args.u_list, "comma-separated exact u values");
  verify->add_option("--tol", verify_args.tol, "tolerance for float cases")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--exact", verify_args.exact, "skip float cases");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Nonnegative summands of the Askey-Gasper form");
  table->add_option("--n", table_args.n)->required();
  table->add_option("--u", table_args.u, "exact u as p/q")->required();
  table->add_option("--format", table_args.format)->check(CLI::IsMember({"csv", "json"}));

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "Print polynomial coefficients, ascending");
  expand->add_option("--family", expand_args.family)
      ->required()
      ->check(CLI::IsMember(
          {"jacobi", "gegenbauer", "chebyshevT", "chebyshevU", "legendre", "assocLegendre"}));
  expand->add_option("--n", expand_args.n)->required();
  expand->add_option("--alpha", expand_args.alpha);
  expand->add_option("--beta", expand_args.beta);
  expand->add_option("--lambda", expand_args.lambda);
  expand->add_option("--j", expand_args.j, "order of the associated Legendre function");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back(); // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*eval) {
      if (!eval_args.u && !eval_args.t)
        throw UsageError("eval needs exactly one of --u or --t");
      return cmd_eval(eval_args, out);
    }
    if (*verify)
      return cmd_verify(verify_args, out);
    if (*table)
      return cmd_table(table_args, out);
    if (*expand)
      return cmd_expand(expand_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace weinstein::cli
