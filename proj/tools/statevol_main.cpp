// Command-line front end: exact volumes, det^alpha moments, exact sampling,
// Monte Carlo estimation, qubit metric volumes and the volume table.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "statevol/metrics.hpp"
#include "statevol/qubit.hpp"
#include "statevol/sampling.hpp"
#include "statevol/volumes.hpp"

namespace {

using nlohmann::json;
using namespace statevol;

constexpr int kExitUsage = 2;
constexpr int kExitEstimation = 3;
constexpr int kExitInfinite = 4;

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

int default_threads() {
  if (const char* env = std::getenv("STATEVOL_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

struct Options {
  std::string format = "text";
  int digits = 10;
  int threads = default_threads();
};

void emit(const json& j, const Options& opt, const std::string& text_line) {
  if (opt.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text_line << "\n";
}

json verdict_json(const QuadratureVerdict& v, int digits) {
  json j;
  j["verdict"] = v.finite ? "finite" : "infinite";
  if (v.finite) {
    j["value"] = fmt(v.result.value, digits);
    j["err_est"] = fmt(v.result.err_est, 3);
    j["converged"] = v.result.converged;
  }
  j["exponent"] = fmt(v.exponent(), 4);
  j["endpoint"] = v.endpoint;
  if (v.probe_inconclusive) j["flags"] = json::array({"probe_inconclusive"});
  return j;
}

json closed_form_json(const ClosedForm& c, int digits) {
  json j;
  if (c.kind == ClosedForm::Kind::exact) j["exact"] = c.exact.to_string();
  j["decimal"] = fmt(c.value(), digits);
  if (c.kind == ClosedForm::Kind::quoted_decimal) j["quoted"] = true;
  return j;
}

int cmd_volume(Field field, int n, const Options& opt) {
  ExactVolume v = volume_lebesgue(field, n);
  json j{{"field", std::string(field_name(field))},
         {"n", n},
         {"coeff_num", boost::multiprecision::numerator(v.coeff).str()},
         {"coeff_den", boost::multiprecision::denominator(v.coeff).str()},
         {"pi_pow", v.pi_pow},
         {"decimal", v.value()}};
  emit(j, opt, v.to_string() + " ≈ " + fmt(v.value(), opt.digits));
  return 0;
}

int cmd_expected_det(Field field, int n, double alpha, const Options& opt) {
  double v = expected_det_alpha(field, n, alpha);
  auto exact = expected_det_alpha_exact(field, n, alpha);
  json j{{"field", std::string(field_name(field))}, {"n", n}, {"alpha", alpha}, {"value", v}};
  std::string line = fmt(v, opt.digits);
  if (exact && exact->sqrt_pi_pow == 0) {
    j["exact"] = Rational(exact->coeff).str();
    line += " = " + Rational(exact->coeff).str();
  }
  emit(j, opt, line);
  return 0;
}

int cmd_sample(Field field, int n, long count, std::uint64_t seed, const Options& opt) {
  RngStream rng(seed, 0);
  if (opt.format == "json") {
    json states = json::array();
    for (long c = 0; c < count; ++c) {
      AnyState st = sample_state(field, n, rng);
      std::visit([&states](const auto& s) { states.push_back(state_components(s)); }, st);
    }
    json j{{"field", std::string(field_name(field))},
           {"n", n},
           {"count", count},
           {"seed", seed},
           {"states", states}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << sample_csv_header(field, n) << "\n";
  for (long c = 0; c < count; ++c) {
    AnyState st = sample_state(field, n, rng);
    std::visit([&](const auto& s) { append_sample_csv(std::cout, s, 17); }, st);
  }
  return 0;
}

int cmd_estimate(Field field, int n, long samples, std::uint64_t seed, const std::string& metric,
                 const std::string& pullback, const Options& opt) {
  McEstimate est;
  if (metric.empty() && pullback.empty()) {
    est = estimate_volume_mc(field, n, samples, seed, opt.threads);
  } else {
    if (field == Field::quaternion)
      throw std::domain_error("metric estimation supports the real and complex fields only");
    FunctionalEstimate fe = dispatch_field(field, [&](auto tag) -> FunctionalEstimate {
      using S = decltype(tag);
      if constexpr (std::is_same_v<S, Quaternion>) {
        throw std::domain_error("metric estimation supports the real and complex fields only");
      } else {
        std::function<double(const SelfAdjointState<S>&)> density;
        if (!metric.empty()) {
          MonotoneFunction f = monotone_by_id(metric);
          density = [f](const SelfAdjointState<S>& st) { return sqrt_det_g_monotone(f, st); };
        } else {
          AdmissibleFunction h = admissible_by_id(pullback);
          density = [h](const SelfAdjointState<S>& st) { return sqrt_det_g_pullback(h, st); };
        }
        return estimate_functional_mc<S>(n, samples, density, seed, opt.threads);
      }
    });
    est = fe.integral;
  }
  json j{{"value", est.value},
         {"std_error", est.std_error},
         {"n_samples", est.n_samples},
         {"seed", seed}};
  if (est.n_accepted >= 0) j["n_accepted"] = est.n_accepted;
  emit(j, opt, fmt(est.value, opt.digits) + " ± " + fmt(est.std_error, 3));
  return 0;
}

int cmd_qubit(Field field, const std::string& metric, const std::string& pullback,
              bool require_finite, const Options& opt) {
  QuadratureVerdict v;
  std::string id;
  std::optional<ClosedForm> closed;
  if (!metric.empty()) {
    MonotoneFunction f = monotone_by_id(metric);
    id = f.id();
    v = qubit_volume_monotone(field, f);
    for (const QubitVolumeRow& row : reproduce_table())
      if (row.id == id) closed = field == Field::complex ? row.closed_complex : row.closed_real;
  } else {
    AdmissibleFunction h = admissible_by_id(pullback);
    id = h.id();
    v = qubit_volume_pullback(field, h);
  }
  json j = verdict_json(v, opt.digits);
  j["id"] = id;
  j["field"] = std::string(field_name(field));
  std::string line;
  if (v.finite) {
    line = fmt(v.result.value, opt.digits);
    if (closed) {
      j["closed_form"] = closed_form_json(*closed, opt.digits);
      double rel = std::abs(v.result.value - closed->value()) / std::abs(closed->value());
      j["rel_error"] = fmt(rel, 3);
      line += " (closed form " + (closed->kind == ClosedForm::Kind::exact
                                      ? closed->exact.to_string()
                                      : fmt(closed->value(), opt.digits)) +
              ")";
    }
  } else {
    line = "infinite (exponent ≈ " + fmt(v.exponent(), 3) + " at " +
           (v.endpoint == 0 ? "t→0" : "r→1") + ")";
  }
  emit(j, opt, line);
  if (require_finite && !v.finite) return kExitInfinite;
  return 0;
}

int cmd_classify(Field field, const std::string& metric, bool require_finite, const Options& opt) {
  MonotoneFunction f = monotone_by_id(metric);
  QuadratureVerdict v = qubit_volume_monotone(field, f);
  json j = verdict_json(v, opt.digits);
  j["id"] = f.id();
  j["field"] = std::string(field_name(field));
  std::string line;
  if (v.finite)
    line = "finite (exponent ≈ " + fmt(v.exponent(), 3) + " at t→0, value " +
           fmt(v.result.value, opt.digits) + ")";
  else
    line = "infinite (exponent ≈ " + fmt(v.exponent(), 3) + " at t→0)";
  emit(j, opt, line);
  if (require_finite && !v.finite) return kExitInfinite;
  return 0;
}

std::string row_flags(const QubitVolumeRow& row, Field field) {
  std::string flags;
  const QuadratureVerdict& v = field == Field::complex ? row.computed_complex : row.computed_real;
  if (v.probe_inconclusive) flags += "probe_inconclusive;";
  if (field == Field::real && row.paper_left_open_real) flags += "paper_left_open;";
  const auto& closed = field == Field::complex ? row.closed_complex : row.closed_real;
  if (closed && closed->kind == ClosedForm::Kind::quoted_decimal) flags += "quoted_decimal;";
  if (!flags.empty()) flags.pop_back();
  return flags;
}

int cmd_table(const Options& opt) {
  std::vector<QubitVolumeRow> rows = reproduce_table();
  json jrows = json::array();
  std::string csv = "id,params,field,verdict,value,closed_form,rel_error,flags\n";
  for (const QubitVolumeRow& row : rows) {
    for (Field field : {Field::complex, Field::real}) {
      const QuadratureVerdict& v = field == Field::complex ? row.computed_complex : row.computed_real;
      const auto& closed = field == Field::complex ? row.closed_complex : row.closed_real;
      std::string params;
      for (const auto& [k, val] : row.params) params += k + "=" + fmt(val, 6);
      std::string value = v.finite ? fmt(v.result.value, opt.digits) : "inf";
      std::string closed_s = closed ? (closed->kind == ClosedForm::Kind::exact
                                           ? closed->exact.to_string()
                                           : fmt(closed->value(), opt.digits))
                                    : "";
      std::string rel;
      if (closed && v.finite)
        rel = fmt(std::abs(v.result.value - closed->value()) / std::abs(closed->value()), 3);
      std::string flags = row_flags(row, field);

      csv += row.id + "," + params + "," + std::string(field_name(field)) + "," +
             (v.finite ? "finite" : "infinite") + "," + value + "," + closed_s + "," + rel + "," +
             flags + "\n";
      json jr = verdict_json(v, opt.digits);
      jr["id"] = row.id;
      jr["params"] = row.params;
      jr["field"] = std::string(field_name(field));
      if (closed) jr["closed_form"] = closed_form_json(*closed, opt.digits);
      if (!rel.empty()) jr["rel_error"] = rel;
      if (!flags.empty()) jr["flags_csv"] = flags;
      jrows.push_back(jr);
    }
  }
  if (opt.format == "json")
    std::cout << json{{"rows", jrows}}.dump() << "\n";
  else
    std::cout << csv;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"state-space volumes over real, complex and quaternionic scalars"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--digits", opt.digits, "significant digits")->check(CLI::Range(1, 17));
  app.add_option("--threads", opt.threads, "worker streams for Monte Carlo")->check(CLI::PositiveNumber);

  std::string field_s = "complex", metric, pullback;
  int n = 2;
  long count = 1, samples = 10000;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  bool require_finite = false;

  auto* volume = app.add_subcommand("volume", "exact Lebesgue volume");
  volume->fallthrough();
  volume->add_option("--field", field_s)->required();
  volume->add_option("--n", n)->required();

  auto* expdet = app.add_subcommand("expected-det", "expected value of det^alpha");
  expdet->fallthrough();
  expdet->add_option("--field", field_s)->required();
  expdet->add_option("--n", n)->required();
  expdet->add_option("--alpha", alpha)->required()->check(CLI::NonNegativeNumber);

  auto* sample = app.add_subcommand("sample", "draw exact uniform states");
  sample->fallthrough();
  sample->add_option("--field", field_s)->required();
  sample->add_option("--n", n)->required();
  sample->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed);

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo volume estimation");
  estimate->fallthrough();
  estimate->add_option("--field", field_s)->required();
  estimate->add_option("--n", n)->required();
  estimate->add_option("--samples", samples)->required();
  estimate->add_option("--seed", seed);
  estimate->add_option("--metric", metric, "monotone generator id");
  estimate->add_option("--pullback", pullback, "admissible generator id");

  auto* qubit = app.add_subcommand("qubit", "qubit metric volume by quadrature");
  qubit->fallthrough();
  qubit->add_option("--field", field_s)->required();
  qubit->add_option("--metric", metric);
  qubit->add_option("--pullback", pullback);
  qubit->add_flag("--require-finite", require_finite);

  auto* table = app.add_subcommand("table", "reproduce the qubit volume table");
  table->fallthrough();

  auto* classify = app.add_subcommand("classify", "finite/infinite divergence verdict");
  classify->fallthrough();
  classify->add_option("--field", field_s)->required();
  classify->add_option("--metric", metric)->required();
  classify->add_flag("--require-finite", require_finite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (volume->parsed()) return cmd_volume(field_from_name(field_s), n, opt);
    if (expdet->parsed()) return cmd_expected_det(field_from_name(field_s), n, alpha, opt);
    if (sample->parsed()) return cmd_sample(field_from_name(field_s), n, count, seed, opt);
    if (estimate->parsed())
      return cmd_estimate(field_from_name(field_s), n, samples, seed, metric, pullback, opt);
    if (qubit->parsed()) {
      if (metric.empty() == pullback.empty())
        throw std::domain_error("qubit needs exactly one of --metric or --pullback");
      return cmd_qubit(field_from_name(field_s), metric, pullback, require_finite, opt);
    }
    if (table->parsed()) return cmd_table(opt);
    if (classify->parsed()) return cmd_classify(field_from_name(field_s), metric, require_finite, opt);
  } catch (const EstimationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEstimation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
