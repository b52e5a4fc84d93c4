// uniqmod: command-line front end.
//
//   uniqmod schur    --h 2,0 --points 1,0.5 | --lambda 1,0 --points ... | --cap n
//   uniqmod solve    problem.json [-o result.json] [--csv grid.csv]
//   uniqmod certify  problem.json [-o report.json] [--no-timestamp]
//   uniqmod validate --suite all --seed 0
//
// Exit codes: 0 pass, 1 certificate or property failure, 2 usage or input error.

#include "uniqmod/problem_io.hpp"
#include "uniqmod/schur.hpp"
#include "uniqmod/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace uniqmod;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in \"" + text + "\"");
  return out;
}

std::vector<int> int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (const auto& item : split(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0) throw UsageError(flag + ": \"" + item + "\" is not a natural number");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  return out;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

struct SchurArgs {
  std::string h, lambda, points;
  std::optional<int> cap;
  bool use_float = false;
};

int cmd_schur(const SchurArgs& a) {
  Json out;
  if (a.cap) {
    if (*a.cap < 0 || *a.cap > 20) throw UsageError("--cap must lie in [0, 20]");
    out["n"] = *a.cap;
    out["N_n"] = to_string(schur_cap(*a.cap));
    if (a.h.empty() && a.lambda.empty()) {
      std::cout << out.dump(2) << '\n';
      return kPass;
    }
  }
  if (a.h.empty() == a.lambda.empty()) throw UsageError("give exactly one of --h and --lambda");
  std::optional<Partition> shape;
  std::optional<DegreeSequence> h;
  try {
    if (!a.h.empty()) {
      h.emplace(int_list(a.h, "--h"));
      shape.emplace(partition_from_degrees(*h));
    } else {
      shape.emplace(int_list(a.lambda, "--lambda"));
      h.emplace(degrees_from_partition(*shape));
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out["h"] = std::vector<int>(h->values().begin(), h->values().end());
  out["lambda"] = std::vector<int>(shape->parts().begin(), shape->parts().end());
  out["tableau_count"] = to_string(tableau_count(*shape));
  if (!a.points.empty()) {
    const auto y = rational_list(a.points, "--points");
    if (y.size() != static_cast<std::size_t>(shape->length()))
      throw UsageError("--points: need " + std::to_string(shape->length()) + " points, got " + std::to_string(y.size()));
    if (a.use_float) {
      std::vector<double> yd;
      for (const auto& v : y) yd.push_back(to_double(v));
      out["value"] = schur_eval<double>(*shape, yd);
    } else {
      out["value"] = to_string(schur_eval<Rational>(*shape, y));
    }
  }
  std::cout << out.dump(2) << '\n';
  return kPass;
}

struct DocArgs {
  std::string path, output, csv;
  bool no_timestamp = false;
};

int cmd_solve(const DocArgs& a) {
  const auto doc = load_problem(a.path);
  const auto result = solve_best_approx(doc.instance, doc.options.grid_eps);
  emit(make_report(doc.source, to_json(result), !a.no_timestamp), a.output);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw UsageError("cannot write " + a.csv);
    write_csv(csv, doc.instance, result);
  }
  return kPass;
}

int cmd_certify(const DocArgs& a) {
  const auto doc = load_problem(a.path);
  try {
    const auto report =
        certify_uniqueness(doc.instance, doc.options.delta, doc.options.mode, doc.options.certify_options());
    emit(make_report(doc.source, to_json(report), !a.no_timestamp), a.output);
    if (!report.passed()) {
      for (const auto& f : report.failures) std::cerr << "FAIL " << f << '\n';
      return kFail;
    }
    return kPass;
  } catch (const CertificationRejected& e) {
    Json result{{"status", "rejected"}, {"mode", mode_name(doc.options.mode)}, {"reason", e.what()}};
    emit(make_report(doc.source, result, !a.no_timestamp), a.output);
    std::cerr << "rejected: " << e.what() << '\n';
    return kFail;
  }
}

int cmd_validate(const std::string& suite, std::uint64_t seed) {
  std::vector<SuiteResult> results;
  try {
    results = run_suite(suite, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  std::cout << std::left << std::setw(9) << "suite" << std::setw(62) << "property" << std::right << std::setw(7)
            << "trials" << std::setw(7) << "fail" << std::setw(14) << "worst margin" << '\n';
  for (const auto& s : results) {
    for (const auto& p : s.properties) {
      std::cout << std::left << std::setw(9) << s.suite << std::setw(62) << p.name << std::right << std::setw(7)
                << p.trials << std::setw(7) << p.failures << std::setw(14) << std::setprecision(4) << p.worst_margin
                << '\n';
      if (p.failures > 0) std::cout << "  first failure: " << p.first_failure << '\n';
    }
    ok = ok && s.passed();
  }
  std::cout << (ok ? "all properties hold" : "property failures") << " (seed " << seed << ")\n";
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective uniqueness certificates for constrained best uniform approximation"};
  app.require_subcommand(1);

  SchurArgs schur;
  auto* schur_cmd = app.add_subcommand("schur", "Evaluate a Schur polynomial or report N_n");
  schur_cmd->set_help_flag("--help", "Print this help message and exit");
  schur_cmd->add_option("--h", schur.h, "strictly decreasing exponents, comma separated");
  schur_cmd->add_option("--lambda", schur.lambda, "partition, comma separated");
  schur_cmd->add_option("--points", schur.points, "evaluation points (a/b, decimals)");
  schur_cmd->add_option("--cap", schur.cap, "report N_n");
  schur_cmd->add_flag("--float", schur.use_float, "evaluate in binary64");

  DocArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute p* and the bracket on E");
  solve_cmd->add_option("problem", solve.path, "problem document")->required();
  solve_cmd->add_option("-o,--output", solve.output, "write JSON here instead of stdout");
  solve_cmd->add_option("--csv", solve.csv, "dump t, f, p*, error on the grid");
  solve_cmd->add_flag("--no-timestamp", solve.no_timestamp, "omit the timestamp field");

  DocArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "Build and stress-test a uniqueness certificate");
  certify_cmd->add_option("problem", certify.path, "problem document")->required();
  certify_cmd->add_option("-o,--output", certify.output, "write the report here instead of stdout");
  certify_cmd->add_flag("--no-timestamp", certify.no_timestamp, "omit the timestamp field");

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* validate_cmd = app.add_subcommand("validate", "Run the seeded property suites");
  validate_cmd->add_option("--suite", suite, "schur, interp, bounds, certify or all");
  validate_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*schur_cmd) return cmd_schur(schur);
    if (*solve_cmd) return cmd_solve(solve);
    if (*certify_cmd) return cmd_certify(certify);
    if (*validate_cmd) return cmd_validate(suite, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ProblemError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
