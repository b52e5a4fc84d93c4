#include "uniqmod/problem_io.hpp"

#include "uniqmod/rational.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace uniqmod {

namespace {

void require_object(const Json& value, const std::string& where) {
  if (!value.is_object()) throw ProblemError(where + ": expected an object");
}

void reject_unknown(const Json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : object.items())
    if (!allowed.contains(key)) throw ProblemError(where + ": unknown field \"" + key + "\"");
}

const Json& field(const Json& object, const std::string& key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) throw ProblemError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::optional<double> optional_number(const Json& object, const std::string& key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  return parse_number(*it, where + "." + key);
}

std::vector<double> number_list(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ProblemError(where + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(parse_number(value[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::pair<double, double>> pair_list(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ProblemError(where + ": expected an array of pairs");
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto v = number_list(value[i], where + "[" + std::to_string(i) + "]");
    if (v.size() != 2) throw ProblemError(where + "[" + std::to_string(i) + "]: expected two numbers");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

std::int64_t integer(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ProblemError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

FunctionSpec parse_function(const Json& j) {
  const std::string where = "function";
  require_object(j, where);
  const Json& family = field(j, "family", where);
  if (!family.is_string()) throw ProblemError(where + ".family: expected a string");
  const auto name = family.get<std::string>();
  if (name == "exp_scale") {
    reject_unknown(j, {"family", "a", "b"}, where);
    return FunctionSpec::exp_scale(parse_number(field(j, "a", where), "function.a"),
                                   parse_number(field(j, "b", where), "function.b"));
  }
  if (name == "abs_shift") {
    reject_unknown(j, {"family", "c"}, where);
    return FunctionSpec::abs_shift(parse_number(field(j, "c", where), "function.c"));
  }
  if (name == "poly") {
    reject_unknown(j, {"family", "coeffs"}, where);
    return FunctionSpec::poly(number_list(field(j, "coeffs", where), "function.coeffs"));
  }
  if (name == "sine") {
    reject_unknown(j, {"family", "a", "phase"}, where);
    const auto phase = optional_number(j, "phase", where);
    return FunctionSpec::sine(parse_number(field(j, "a", where), "function.a"), phase.value_or(0.0));
  }
  if (name == "piecewise_linear") {
    reject_unknown(j, {"family", "breakpoints"}, where);
    return FunctionSpec::piecewise_linear(pair_list(field(j, "breakpoints", where), "function.breakpoints"));
  }
  throw ProblemError(where + ".family: unknown family \"" + name + "\"");
}

ModulusOfContinuity parse_omega(const Json& j) {
  const std::string where = "omega";
  require_object(j, where);
  const Json& family = field(j, "family", where);
  if (!family.is_string()) throw ProblemError(where + ".family: expected a string");
  const auto name = family.get<std::string>();
  if (name == "lipschitz") {
    reject_unknown(j, {"family", "constant"}, where);
    return ModulusOfContinuity::lipschitz(parse_number(field(j, "constant", where), "omega.constant"));
  }
  if (name == "hoelder") {
    reject_unknown(j, {"family", "constant", "exponent"}, where);
    return ModulusOfContinuity::hoelder(parse_number(field(j, "constant", where), "omega.constant"),
                                        parse_number(field(j, "exponent", where), "omega.exponent"));
  }
  if (name == "table") {
    reject_unknown(j, {"family", "samples"}, where);
    return ModulusOfContinuity::table(pair_list(field(j, "samples", where), "omega.samples"));
  }
  throw ProblemError(where + ".family: unknown family \"" + name + "\"");
}

ConstraintSet parse_constraints(const Json& j) {
  const std::string where = "constraints";
  require_object(j, where);
  reject_unknown(j, {"n", "entries"}, where);
  const auto n = integer(field(j, "n", where), "constraints.n");
  if (n < 0 || n > 64) throw ProblemError("constraints.n: must lie in [0, 64]");
  std::vector<CoefficientBound> entries;
  if (const auto it = j.find("entries"); it != j.end()) {
    if (!it->is_array()) throw ProblemError("constraints.entries: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string w = "constraints.entries[" + std::to_string(i) + "]";
      const Json& e = (*it)[i];
      require_object(e, w);
      reject_unknown(e, {"k", "lower", "upper"}, w);
      const auto k = integer(field(e, "k", w), w + ".k");
      if (k < 0 || k > n) throw ProblemError(w + ".k: must satisfy 0 < k <= n");
      entries.push_back({static_cast<int>(k), optional_number(e, "lower", w), optional_number(e, "upper", w)});
    }
  }
  try {
    return ConstraintSet(static_cast<int>(n), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ProblemError(std::string("constraints: ") + e.what());
  }
}

ProblemOptions parse_options(const Json& j) {
  const std::string where = "options";
  require_object(j, where);
  reject_unknown(j, {"grid_eps", "delta", "mode", "seed", "L", "strong_unicity_samples", "pair_candidates"}, where);
  ProblemOptions o;
  if (auto v = optional_number(j, "grid_eps", where)) o.grid_eps = *v;
  if (!(o.grid_eps > 0.0) || !std::isfinite(o.grid_eps)) throw ProblemError("options.grid_eps: must be positive");
  if (auto v = optional_number(j, "delta", where)) o.delta = *v;
  if (!(o.delta >= 0.0) || !std::isfinite(o.delta)) throw ProblemError("options.delta: must be nonnegative");
  if (const auto it = j.find("mode"); it != j.end()) {
    if (!it->is_string()) throw ProblemError("options.mode: expected a string");
    try {
      o.mode = parse_mode(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ProblemError(std::string("options.mode: ") + e.what());
    }
  }
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0))
      throw ProblemError("options.seed: expected a nonnegative integer");
    o.seed = it->get<std::uint64_t>();
  }
  o.L = optional_number(j, "L", where);
  if (o.L && !(*o.L > 0.0)) throw ProblemError("options.L: must be positive");
  if (const auto it = j.find("strong_unicity_samples"); it != j.end()) {
    const auto v = integer(*it, "options.strong_unicity_samples");
    if (v < 0 || v > 10'000'000) throw ProblemError("options.strong_unicity_samples: out of range");
    o.strong_unicity_samples = static_cast<int>(v);
  }
  if (const auto it = j.find("pair_candidates"); it != j.end()) {
    const auto v = integer(*it, "options.pair_candidates");
    if (v < 0 || v > 100'000) throw ProblemError("options.pair_candidates: out of range");
    o.pair_candidates = static_cast<int>(v);
  }
  return o;
}

}  // namespace

double parse_number(const Json& value, const std::string& where) {
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw ProblemError(where + ": number must be finite");
    return v;
  }
  if (value.is_string()) {
    try {
      return to_double(parse_rational(value.get<std::string>()));
    } catch (const std::exception& e) {
      throw ProblemError(where + ": " + e.what());
    }
  }
  throw ProblemError(where + ": expected a number or a \"num/den\" string");
}

std::string mode_name(CertifyMode mode) { return mode == CertifyMode::with_L ? "with_L" : "L_free"; }

CertifyMode parse_mode(const std::string& name) {
  if (name == "with_L") return CertifyMode::with_L;
  if (name == "L_free") return CertifyMode::L_free;
  throw std::invalid_argument("unknown mode \"" + name + "\" (expected with_L or L_free)");
}

CertifyOptions ProblemOptions::certify_options() const {
  return CertifyOptions{.grid_eps = grid_eps,
                        .seed = seed,
                        .strong_unicity_samples = strong_unicity_samples,
                        .pair_candidates = pair_candidates,
                        .declared_L = L};
}

ProblemDocument parse_problem(const Json& document) {
  require_object(document, "document");
  reject_unknown(document, {"schema_version", "function", "omega", "constraints", "p0", "options"}, "document");
  const auto version = integer(field(document, "schema_version", "document"), "schema_version");
  if (version != 1) throw ProblemError("schema_version: only version 1 is supported");

  FunctionSpec f = parse_function(field(document, "function", "document"));
  ConstraintSet K = parse_constraints(field(document, "constraints", "document"));
  const auto omega_it = document.find("omega");
  ModulusOfContinuity omega = omega_it != document.end() ? parse_omega(*omega_it) : f.modulus();
  Polynomial<double> p0 = K.clamp(Polynomial<double>::zero(K.n()));
  if (const auto it = document.find("p0"); it != document.end()) p0 = Polynomial<double>(number_list(*it, "p0"));
  ProblemOptions options;
  if (const auto it = document.find("options"); it != document.end()) options = parse_options(*it);

  try {
    return ProblemDocument{document, ApproximationInstance(std::move(f), std::move(omega), std::move(K), std::move(p0)),
                           options};
  } catch (const std::invalid_argument& e) {
    throw ProblemError(e.what());
  }
}

ProblemDocument parse_problem_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ProblemError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

ProblemDocument load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

Json to_json(const Polynomial<double>& p) { return Json(p.coeffs()); }

namespace {

Json factor(const Factor& f) { return Json{{"value", f.value}, {"source", f.source}}; }

Json alternation_json(const Alternation& a) {
  Json points = Json::array();
  for (const auto& p : a.points) points.push_back({{"x", p.x}, {"sign", p.sign}, {"error", p.error}});
  return Json{{"nu", a.nu}, {"other_sign_completes", a.other_sign_completes}, {"points", points}};
}

}  // namespace

Json to_json(const BestApproxResult& r) {
  return Json{{"p_star", to_json(r.p_star)},
              {"E_low", r.E_low},
              {"E_high", r.E_high},
              {"grid_eps", r.grid_eps},
              {"grid", {{"step", r.grid.step()}, {"count", r.grid.size()}}},
              {"grid_error", r.grid_error},
              {"M", r.M},
              {"p_star_within_M", r.p_star_within_M},
              {"active_set", r.active_set},
              {"alternation", r.alternation ? alternation_json(*r.alternation) : Json(nullptr)},
              {"lp_iterations", r.lp_iterations}};
}

Json to_json(const UniquenessCertificate& c) {
  return Json{{"n", c.n},
              {"omega", c.omega.describe()},
              {"M", factor(c.M)},
              {"N_n", {{"value", to_string(c.schur_cap)}, {"source", "schur_cap: max SSYT count over exponent sets"}}},
              {"F_n", factor(c.f_const)},
              {"L", factor(c.L)},
              {"chi_half_L", factor(c.chi_half_L)},
              {"exponent", factor(c.exponent)},
              {"denominator", factor(c.denominator)},
              {"gamma", factor(c.gamma)}};
}

Json to_json(const CertificationReport& r) {
  Json collapse = Json::array();
  for (const auto& c : r.collapse)
    collapse.push_back({{"modulus", c.modulus},
                        {"threshold", c.threshold},
                        {"candidates", c.candidates},
                        {"accepted", c.accepted},
                        {"pairs", c.pairs},
                        {"max_pair_distance", c.max_pair_distance},
                        {"violations", c.violations},
                        {"relaxed",
                         {{"threshold_base", "grid_error(p_star)"},
                          {"accepted", c.relaxed_accepted},
                          {"pairs", c.relaxed_pairs},
                          {"max_pair_distance", c.relaxed_max_pair_distance},
                          {"violations", c.relaxed_violations}}}});
  Json table = Json::array();
  for (const auto& [d, v] : r.psi_star_table) table.push_back({{"delta", d}, {"psi_star", v}});
  const auto& su = r.strong_unicity;
  Json strong = su.ran ? Json{{"samples", su.samples}, {"min_margin", su.min_margin}, {"violations", su.violations}}
                       : Json{{"skipped", su.skipped_reason}};
  return Json{{"status", r.passed() ? "pass" : "fail"},
              {"mode", mode_name(r.mode)},
              {"delta", r.delta},
              {"seed", r.options.seed},
              {"solve", to_json(r.solve)},
              {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)},
              {"psi", r.certificate ? Json(r.certificate->psi(r.delta)) : Json(nullptr)},
              {"psi_star", r.certificate ? Json(r.certificate->psi_star(r.delta)) : Json(0.0)},
              {"psi_star_table", table},
              {"psi_star_within_quarter", r.psi_star_within_quarter},
              {"alternation_hypothesis_verified", r.alternation_hypothesis_verified},
              {"collapse", collapse},
              {"strong_unicity", strong},
              {"failures", r.failures}};
}

Json make_report(const Json& input, const Json& result, bool with_timestamp) {
  Json report{{"tool", "uniqmod"}, {"version", "0.1.0"}};
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    report["timestamp"] = os.str();
  }
  report["input"] = input;
  report["result"] = result;
  return report;
}

void write_csv(std::ostream& out, const ApproximationInstance& instance, const BestApproxResult& result) {
  out << "t,f,p_star,error\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    const double t = result.grid[i];
    const double f = instance.f(t);
    const double p = result.p_star(t);
    out << t << ',' << f << ',' << p << ',' << f - p << '\n';
  }
}

}  // namespace uniqmod
