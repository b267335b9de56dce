#include "tauber/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace tauber {
namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json complex_pair(const Complex& z) { return json::array({number(z.real()), number(z.imag())}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {number_from(j[0]), number_from(j[1])};
}

json window_json(const Window& w) { return {{"n_min", w.n_min}, {"n_max", w.n_max}}; }

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json threshold_json(const Threshold& t) { return {{"value", number(t.value)}, {"note", t.note}}; }

}  // namespace

json to_json(const ConditionVerdict& v) {
  return {{"passes", v.passes},
          {"constant_M", number(v.constant_M)},
          {"fitted_slope", number(v.fitted_slope)},
          {"window", window_json(v.window)},
          {"truncation_K", v.truncation_K},
          {"notes", v.notes}};
}

ConditionVerdict verdict_from_json(const json& j) {
  ConditionVerdict v;
  v.passes = j.at("passes").get<bool>();
  v.constant_M = number_from(j.at("constant_M"));
  v.fitted_slope = number_from(j.at("fitted_slope"));
  v.window = {j.at("window").at("n_min").get<std::int64_t>(),
              j.at("window").at("n_max").get<std::int64_t>()};
  v.truncation_K = j.at("truncation_K").get<std::int64_t>();
  v.notes = j.value("notes", "");
  return v;
}

json to_json(const CoeffTable& table) {
  json coeffs = json::array();
  bool real_valued = table.is_conjugate_symmetric();
  for (const auto& c : table.values()) coeffs.push_back(complex_pair(c));
  return {{"k_max", table.k_max()}, {"coefficients", coeffs}, {"real_valued", real_valued}};
}

CoeffTable coeff_table_from_json(const json& j) {
  const auto K = j.at("k_max").get<std::int64_t>();
  const auto& arr = j.at("coefficients");
  if (K < 0 || arr.size() != static_cast<std::size_t>(2 * K + 1)) {
    throw std::invalid_argument("coefficient file: expected 2 k_max + 1 coefficients");
  }
  std::vector<Complex> v;
  v.reserve(arr.size());
  for (const auto& c : arr) v.push_back(complex_from(c));
  return CoeffTable(K, std::move(v));
}

json to_json(const GridFunction& f) {
  json s = json::array();
  for (const auto& z : f.samples()) s.push_back(complex_pair(z));
  return {{"samples", s}};
}

GridFunction grid_function_from_json(const json& j) {
  std::vector<Complex> v;
  for (const auto& z : j.at("samples")) v.push_back(complex_from(z));
  return GridFunction(std::move(v));
}

json to_json(const HomogeneityReport& r) {
  json profile = json::array();
  for (std::size_t i = 0; i < r.h3_profile.size(); ++i) {
    profile.push_back({{"shift", number(r.h3_shifts[i])}, {"norm", number(r.h3_profile[i])}});
  }
  return {{"spec", r.spec},
          {"h1_constant", number(r.h1_constant)},
          {"h1_holds", r.h1_holds},
          {"h2_max_residual", number(r.h2_max_residual)},
          {"h2_holds", r.h2_holds},
          {"h3_profile", profile},
          {"h3_decreasing", r.h3_decreasing}};
}

json to_json(const ExperimentReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"name", v.name}, {"required", v.required}, {"verdict", to_json(v.verdict)}});
  }
  json table = json::array();
  for (const auto& row : r.table) {
    table.push_back({{"n", row.n},
                     {"err_partial", number(row.err_partial)},
                     {"err_cesaro", number(row.err_cesaro)}});
  }
  json audit = json::array();
  for (const auto& a : r.holder_audit) {
    audit.push_back({{"n", a.n},
                     {"m", a.m},
                     {"lhs", number(a.lhs)},
                     {"weighted_rhs", number(a.weighted_rhs)},
                     {"rhs", number(a.rhs)}});
  }
  json metrics = json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = number(v);
  json tolerances = json::object();
  for (const auto& [k, t] : r.tolerances) tolerances[k] = threshold_json(t);
  const auto& c = r.conclusion;
  return {{"theorem", r.theorem},
          {"inputs", r.inputs},
          {"verdicts", verdicts},
          {"table", table},
          {"holder_audit", audit},
          {"metrics", metrics},
          {"tolerances", tolerances},
          {"diagnostics", r.diagnostics},
          {"precondition_failed", r.precondition_failed},
          {"conclusion",
           {{"conditions_hold", c.conditions_hold},
            {"cesaro_converges", c.cesaro_converges},
            {"partial_sums_converge", c.partial_sums_converge},
            {"convergence_observed", c.convergence_observed},
            {"outcome", to_string(c.outcome)}}}};
}

ExperimentReport experiment_from_json(const json& j) {
  ExperimentReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.inputs = j.at("inputs");
  for (const auto& v : j.at("verdicts")) {
    r.verdicts.push_back({v.at("name").get<std::string>(), v.at("required").get<bool>(),
                          verdict_from_json(v.at("verdict"))});
  }
  for (const auto& row : j.at("table")) {
    r.table.push_back({row.at("n").get<std::int64_t>(), number_from(row.at("err_partial")),
                       number_from(row.at("err_cesaro"))});
  }
  for (const auto& a : j.at("holder_audit")) {
    r.holder_audit.push_back({a.at("n").get<std::int64_t>(), a.at("m").get<std::int64_t>(),
                              number_from(a.at("lhs")), number_from(a.at("weighted_rhs")),
                              number_from(a.at("rhs"))});
  }
  for (const auto& [k, v] : j.at("metrics").items()) r.metrics[k] = number_from(v);
  for (const auto& [k, t] : j.at("tolerances").items()) {
    r.tolerances[k] = {number_from(t.at("value")), t.at("note").get<std::string>()};
  }
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  r.precondition_failed = j.at("precondition_failed").get<bool>();
  const auto& c = j.at("conclusion");
  r.conclusion.conditions_hold = c.at("conditions_hold").get<bool>();
  r.conclusion.cesaro_converges = c.at("cesaro_converges").get<bool>();
  r.conclusion.partial_sums_converge = c.at("partial_sums_converge").get<bool>();
  r.conclusion.convergence_observed = c.at("convergence_observed").get<bool>();
  r.conclusion.outcome = outcome_from_string(c.at("outcome").get<std::string>());
  return r;
}

json envelope(const std::string& command, json result, bool with_timestamp) {
  json out = {{"schema", kReportSchema}, {"command", command}, {"result", std::move(result)}};
  if (with_timestamp) out["timestamp"] = utc_now();
  return out;
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "n,err_Sn,err_sigman\n";
  const auto cell = [&](double v) {
    if (std::isfinite(v)) os << v;
  };
  for (const auto& row : r.table) {
    os << row.n << ',';
    cell(row.err_partial);
    os << ',';
    cell(row.err_cesaro);
    os << '\n';
  }
  return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tauber
