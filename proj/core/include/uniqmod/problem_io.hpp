#pragma once

// JSON problem documents and machine-readable outputs.
//
// A document looks like
//
//   {
//     "schema_version": 1,
//     "function": {"family": "poly", "coeffs": [0, 0, 1]},
//     "omega": {"family": "lipschitz", "constant": 2},
//     "constraints": {"n": 1, "entries": [{"k": 1, "upper": "1/2"}]},
//     "p0": [0, 0],
//     "options": {"grid_eps": 1e-3, "delta": 0.1, "mode": "with_L", "seed": 0}
//   }
//
// "omega" and "p0" are optional. Any number may be written as a JSON number or as a
// string "num/den" or decimal. Unknown keys are rejected.

#include "uniqmod/solver.hpp"

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace uniqmod {

using Json = nlohmann::ordered_json;

/// Malformed or invalid problem document.
class ProblemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemOptions {
  double grid_eps = 1e-3;
  double delta = 0.1;
  CertifyMode mode = CertifyMode::with_L;
  std::uint64_t seed = 0;
  std::optional<double> L;
  int strong_unicity_samples = 500;
  int pair_candidates = 200;

  CertifyOptions certify_options() const;
};

struct ProblemDocument {
  Json source;  ///< the parsed input, kept verbatim for reports
  ApproximationInstance instance;
  ProblemOptions options;
};

ProblemDocument parse_problem(const Json& document);
ProblemDocument parse_problem_text(const std::string& text);
ProblemDocument load_problem(const std::string& path);

/// JSON number, or a string holding "num/den" or a decimal.
double parse_number(const Json& value, const std::string& where);

std::string mode_name(CertifyMode mode);
CertifyMode parse_mode(const std::string& name);

Json to_json(const Polynomial<double>& p);
Json to_json(const BestApproxResult& result);
Json to_json(const UniquenessCertificate& certificate);
Json to_json(const CertificationReport& report);

/// {"tool", "version", [timestamp], "input", "result"}.
Json make_report(const Json& input, const Json& result, bool with_timestamp);

/// t, f(t), p*(t), f(t) - p*(t) for every grid point.
void write_csv(std::ostream& out, const ApproximationInstance& instance, const BestApproxResult& result);

}  // namespace uniqmod
