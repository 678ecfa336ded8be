#include <cmath>

#include "ultra/error.hpp"
#include "ultra/harness.hpp"

namespace ultra::harness {

std::string to_string(Campaign c) {
  switch (c) {
    case Campaign::Theorem12: return "theorem12";
    case Campaign::Conjecture32: return "conj32";
    case Campaign::Question31: return "q31";
    case Campaign::SsrExplore: return "ssr";
    case Campaign::BiorthoEquiv: return "biortho-equiv";
  }
  return "unknown";
}

Campaign campaign_from_string(const std::string& s) {
  for (auto c : {Campaign::Theorem12, Campaign::Conjecture32, Campaign::Question31, Campaign::SsrExplore,
                 Campaign::BiorthoEquiv})
    if (to_string(c) == s) return c;
  fail(ErrorCode::BadParameter, "unknown campaign '" + s + "'");
}

std::string to_string(ReportFormat f) { return f == ReportFormat::Json ? "json" : "csv"; }

ReportFormat format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  fail(ErrorCode::BadParameter, "format must be json or csv, got '" + s + "'");
}

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Violation: return "violation";
    case CaseStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

CaseStatus status_from_string(const std::string& s) {
  if (s == "pass") return CaseStatus::Pass;
  if (s == "violation") return CaseStatus::Violation;
  if (s == "indeterminate") return CaseStatus::Indeterminate;
  fail(ErrorCode::BadParameter, "unknown case status '" + s + "'");
}

CampaignConfig CampaignConfig::defaults(Campaign c) {
  CampaignConfig cfg;
  cfg.campaign = c;
  switch (c) {
    case Campaign::Theorem12:
      cfg.alphas = {-0.5, 0.0, 0.5, 1.0, 2.5};
      cfg.deg_cap = 12;
      cfg.trials = 1000;
      break;
    case Campaign::Conjecture32:
      cfg.alpha_min = cfg.beta_min = 0.0;
      cfg.alpha_max = cfg.beta_max = 4.0;
      cfg.step = 1.0;
      cfg.deg_cap = 14;
      cfg.trials = 200;
      // boundary inputs produce roots of multiplicity up to ~7 at +-1
      cfg.precision = PrecisionPolicy::extended(256);
      break;
    case Campaign::Question31:
      cfg.alpha_min = cfg.beta_min = -0.5;
      cfg.alpha_max = cfg.beta_max = 2.0;
      cfg.step = 0.5;
      cfg.deg_cap = 10;
      cfg.trials = 20;
      cfg.precision = PrecisionPolicy::extended(256);
      break;
    case Campaign::SsrExplore:
      cfg.betas = {-1.5, -1.0, -0.5, 0.5, 1.5, 3.0};
      cfg.alpha_min = cfg.beta_min = -0.5;
      cfg.alpha_max = cfg.beta_max = 2.0;
      cfg.step = 0.5;
      cfg.trials = 500;
      cfg.m_max = 5;
      break;
    case Campaign::BiorthoEquiv:
      cfg.alphas = {0.0, 1.0};
      cfg.deg_cap = 6;
      cfg.trials = 100;
      // Hadamard ratios of moment matrices at clustered nodes reach 1e-13
      // while the solve stays accurate; the residual check is the certificate
      cfg.precision.tau_det = 1e-16;
      break;
  }
  return cfg;
}

namespace {

std::vector<double> make_grid(const std::vector<double>& explicit_values, double lo, double hi, double step) {
  if (!explicit_values.empty()) return explicit_values;
  std::vector<double> g;
  if (hi < lo) return g;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + 1e-9 * step) break;
    g.push_back(v);
  }
  return g;
}

}  // namespace

std::vector<double> CampaignConfig::alpha_grid() const { return make_grid(alphas, alpha_min, alpha_max, step); }

std::vector<double> CampaignConfig::beta_grid() const { return make_grid(betas, beta_min, beta_max, step); }

void CampaignConfig::validate() const {
  precision.validate();
  if (!(step > 0.0)) fail(ErrorCode::BadParameter, "step must be positive");
  if (deg_cap < 1 || deg_cap > 30) fail(ErrorCode::BadParameter, "deg-cap must be in 1..30");
  if (trials < 1) fail(ErrorCode::BadParameter, "trials must be >= 1");
  if (!(tol > 0.0) || !(boundary_tol > 0.0)) fail(ErrorCode::BadParameter, "tolerances must be positive");
  if (!(root_bound > 0.0) || !(root_bound < 1.0)) fail(ErrorCode::BadParameter, "root bound must be in (0, 1)");
  if (campaign == Campaign::BiorthoEquiv && deg_cap > 8)
    fail(ErrorCode::BadParameter, "biortho-equiv supports deg-cap <= 8");
  if (campaign == Campaign::SsrExplore) {
    if (trials < 100) fail(ErrorCode::BadParameter, "ssr scans need trials >= 100");
    const int cap = precision.is_extended() ? 8 : 6;
    if (m_max < 1 || m_max > cap) fail(ErrorCode::BadParameter, "m-max out of range for the precision");
  }
}

double CaseRecord::parameter(const std::string& name) const {
  for (const auto& [k, v] : parameters)
    if (k == name) return v;
  fail(ErrorCode::BadParameter, "record has no parameter '" + name + "'");
}

void CampaignReport::summarize() {
  summary = {};
  summary.cases = records.size();
  for (const auto& r : records) {
    switch (r.status) {
      case CaseStatus::Pass: ++summary.passes; break;
      case CaseStatus::Violation:
        ++summary.violations;
        if (!r.exploratory) ++summary.asserted_violations;
        break;
      case CaseStatus::Indeterminate: ++summary.indeterminates; break;
    }
  }
}

}  // namespace ultra::harness
