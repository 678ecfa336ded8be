#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "ultra/error.hpp"
#include "ultra/harness.hpp"

namespace ultra::harness {
namespace {

// ordered, so parameter order survives a round trip
using json = nlohmann::ordered_json;

/// Recorded so readers know how random inputs were drawn.
constexpr const char* kInputDistribution = "roots iid uniform on (-root_bound, root_bound)";

std::string quote(const std::string& s) { return json(s).dump(); }

std::string number_list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
  return s + "]";
}

/// Small writer that keeps key order fixed and numbers at 17 digits; the
/// library's own dump uses shortest round-trip formatting instead.
class Obj {
 public:
  explicit Obj(std::string indent) : indent_(std::move(indent)) {}
  Obj& raw(const std::string& key, const std::string& value) {
    body_ += (body_.empty() ? "" : ",\n") + indent_ + "  " + quote(key) + ": " + value;
    return *this;
  }
  Obj& num(const std::string& key, double v) { return raw(key, format_number(v)); }
  Obj& str(const std::string& key, const std::string& v) { return raw(key, quote(v)); }
  Obj& integer(const std::string& key, unsigned long long v) { return raw(key, std::to_string(v)); }
  Obj& boolean(const std::string& key, bool v) { return raw(key, v ? "true" : "false"); }
  std::string done() const { return body_.empty() ? "{}" : "{\n" + body_ + "\n" + indent_ + "}"; }

 private:
  std::string indent_;
  std::string body_;
};

std::string config_json(const CampaignConfig& c, const std::string& indent) {
  Obj o(indent);
  o.str("campaign", to_string(c.campaign))
      .raw("alphas", number_list(c.alphas))
      .raw("betas", number_list(c.betas))
      .num("alpha_min", c.alpha_min)
      .num("alpha_max", c.alpha_max)
      .num("beta_min", c.beta_min)
      .num("beta_max", c.beta_max)
      .num("step", c.step)
      .integer("deg_cap", static_cast<unsigned long long>(c.deg_cap))
      .integer("trials", static_cast<unsigned long long>(c.trials))
      .integer("seed", c.seed)
      .str("precision", c.precision.to_string())
      .num("tau_trim", c.precision.tau_trim)
      .num("tau_root", c.precision.tau_root)
      .num("tau_det", c.precision.tau_det)
      .num("tol", c.tol)
      .num("boundary_tol", c.boundary_tol)
      .integer("m_max", static_cast<unsigned long long>(c.m_max))
      .num("root_bound", c.root_bound)
      .str("input_distribution", kInputDistribution)
      .boolean("timing", c.timing)
      .str("out", c.out)
      .str("format", to_string(c.format));
  return o.done();
}

std::string record_json(const CaseRecord& r, const std::string& indent) {
  Obj params(indent + "  ");
  for (const auto& [k, v] : r.parameters) params.num(k, v);
  Obj o(indent);
  o.integer("index", r.index)
      .raw("parameters", params.done())
      .str("input", r.input)
      .str("classification", r.classification)
      .str("status", to_string(r.status))
      .boolean("exploratory", r.exploratory)
      .num("min_boundary_distance", r.min_boundary_distance)
      .num("wall_time", r.wall_time)
      .str("detail", r.detail);
  return o.done();
}

double number_or_inf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string report_to_json(const CampaignReport& report) {
  std::string records = "[";
  for (std::size_t i = 0; i < report.records.size(); ++i)
    records += (i ? ",\n    " : "\n    ") + record_json(report.records[i], "    ");
  records += report.records.empty() ? "]" : "\n  ]";

  const auto& s = report.summary;
  Obj summary("  ");
  summary.integer("cases", s.cases)
      .integer("passes", s.passes)
      .integer("violations", s.violations)
      .integer("indeterminates", s.indeterminates)
      .integer("asserted_violations", s.asserted_violations);

  Obj o("");
  o.str("artifact_version", report.artifact_version)
      .str("timestamp", report.timestamp)
      .raw("config", config_json(report.config, "  "))
      .raw("records", records)
      .raw("summary", summary.done());
  return o.done() + "\n";
}

std::string report_to_csv(const CampaignReport& report) {
  std::string out = "index,parameters,input,classification,status,exploratory,min_boundary_distance,wall_time,detail\n";
  for (const auto& r : report.records) {
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : ";") + k + "=" + format_number(v);
    out += std::to_string(r.index) + "," + csv_field(params) + "," + csv_field(r.input) + "," +
           csv_field(r.classification) + "," + to_string(r.status) + "," + (r.exploratory ? "true" : "false") + "," +
           format_number(r.min_boundary_distance) + "," + format_number(r.wall_time) + "," + csv_field(r.detail) +
           "\n";
  }
  return out;
}

CampaignReport report_from_json(const std::string& text) {
  CampaignReport rep;
  try {
    const json j = json::parse(text);
    rep.artifact_version = j.at("artifact_version").get<std::string>();
    rep.timestamp = j.at("timestamp").get<std::string>();

    const json& c = j.at("config");
    auto& cfg = rep.config;
    cfg.campaign = campaign_from_string(c.at("campaign").get<std::string>());
    cfg.alphas = c.at("alphas").get<std::vector<double>>();
    cfg.betas = c.at("betas").get<std::vector<double>>();
    cfg.alpha_min = c.at("alpha_min").get<double>();
    cfg.alpha_max = c.at("alpha_max").get<double>();
    cfg.beta_min = c.at("beta_min").get<double>();
    cfg.beta_max = c.at("beta_max").get<double>();
    cfg.step = c.at("step").get<double>();
    cfg.deg_cap = c.at("deg_cap").get<int>();
    cfg.trials = c.at("trials").get<int>();
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.precision = PrecisionPolicy::parse(c.at("precision").get<std::string>());
    cfg.precision.tau_trim = c.at("tau_trim").get<double>();
    cfg.precision.tau_root = c.at("tau_root").get<double>();
    cfg.precision.tau_det = c.at("tau_det").get<double>();
    cfg.tol = c.at("tol").get<double>();
    cfg.boundary_tol = c.at("boundary_tol").get<double>();
    cfg.m_max = c.at("m_max").get<int>();
    cfg.root_bound = c.at("root_bound").get<double>();
    cfg.timing = c.at("timing").get<bool>();
    cfg.out = c.at("out").get<std::string>();
    cfg.format = format_from_string(c.at("format").get<std::string>());

    for (const json& r : j.at("records")) {
      CaseRecord rec;
      rec.index = r.at("index").get<std::size_t>();
      for (const auto& [k, v] : r.at("parameters").items()) rec.parameters.emplace_back(k, v.get<double>());
      rec.input = r.at("input").get<std::string>();
      rec.classification = r.at("classification").get<std::string>();
      rec.status = status_from_string(r.at("status").get<std::string>());
      rec.exploratory = r.at("exploratory").get<bool>();
      rec.min_boundary_distance = number_or_inf(r.at("min_boundary_distance"));
      rec.wall_time = number_or_inf(r.at("wall_time"));
      rec.detail = r.at("detail").get<std::string>();
      rep.records.push_back(std::move(rec));
    }
    const json& s = j.at("summary");
    rep.summary.cases = s.at("cases").get<std::size_t>();
    rep.summary.passes = s.at("passes").get<std::size_t>();
    rep.summary.violations = s.at("violations").get<std::size_t>();
    rep.summary.indeterminates = s.at("indeterminates").get<std::size_t>();
    rep.summary.asserted_violations = s.at("asserted_violations").get<std::size_t>();
  } catch (const json::exception& e) {
    fail(ErrorCode::BadParameter, std::string("malformed report: ") + e.what());
  }
  return rep;
}

void emit_report(const CampaignReport& report, ReportFormat format, const std::string& path) {
  const std::string text = format == ReportFormat::Json ? report_to_json(report) : report_to_csv(report);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) fail(ErrorCode::IoFailure, "write to '" + path + "' failed");
}

}  // namespace ultra::harness
