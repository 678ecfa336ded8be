#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ultra/precision.hpp"

namespace ultra::harness {

inline constexpr const char* kArtifactVersion = "1.0.0";
/// Timestamp written when timing is off, so reports stay byte-identical.
inline constexpr const char* kFixedTimestamp = "1970-01-01T00:00:00Z";

enum class Campaign { Theorem12, Conjecture32, Question31, SsrExplore, BiorthoEquiv };
enum class ReportFormat { Json, Csv };

std::string to_string(Campaign c);
Campaign campaign_from_string(const std::string& s);
std::string to_string(ReportFormat f);
ReportFormat format_from_string(const std::string& s);

struct CampaignConfig {
  Campaign campaign = Campaign::Theorem12;

  /// Explicit parameter lists; when empty the grid min..max by step is used.
  std::vector<double> alphas;
  std::vector<double> betas;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  double beta_min = 0.0;
  double beta_max = 0.0;
  double step = 1.0;

  /// Degree cap (n + m cap for the boundary family).
  int deg_cap = 12;
  /// Random inputs per parameter point (tuples per m for SSR scans).
  int trials = 1000;
  std::uint64_t seed = 1;
  PrecisionPolicy precision;
  /// Open-interval classification tolerance.
  double tol = 1e-8;
  /// Closed-interval tolerance for boundary-rooted inputs.
  double boundary_tol = 1e-7;
  int m_max = 5;
  /// Roots of random inputs are drawn uniformly from (-root_bound, root_bound).
  double root_bound = 0.99;
  bool timing = false;

  std::string out;
  ReportFormat format = ReportFormat::Json;

  static CampaignConfig defaults(Campaign c);

  std::vector<double> alpha_grid() const;
  std::vector<double> beta_grid() const;
  /// Throws BadParameter on inconsistent settings.
  void validate() const;
};

enum class CaseStatus { Pass, Violation, Indeterminate };
std::string to_string(CaseStatus s);
CaseStatus status_from_string(const std::string& s);

struct CaseRecord {
  std::size_t index = 0;
  std::vector<std::pair<std::string, double>> parameters;
  std::string input;
  std::string classification;
  CaseStatus status = CaseStatus::Pass;
  /// Exploration outside the regime a theorem or conjecture covers;
  /// never counted toward the exit status.
  bool exploratory = false;
  double min_boundary_distance = 0.0;
  double wall_time = 0.0;
  std::string detail;

  double parameter(const std::string& name) const;
};

struct CampaignSummary {
  std::size_t cases = 0;
  std::size_t passes = 0;
  std::size_t violations = 0;
  std::size_t indeterminates = 0;
  /// Violations among non-exploratory cases.
  std::size_t asserted_violations = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CaseRecord> records;
  CampaignSummary summary;
  std::string artifact_version = kArtifactVersion;
  std::string timestamp = kFixedTimestamp;

  /// Recomputes summary from records.
  void summarize();
};

CampaignReport run_theorem12_campaign(const CampaignConfig& config);
CampaignReport run_conjecture32_campaign(const CampaignConfig& config);
CampaignReport run_question31_campaign(const CampaignConfig& config);
CampaignReport run_ssr_explore(const CampaignConfig& config);
CampaignReport run_biortho_equiv_campaign(const CampaignConfig& config);
CampaignReport run_campaign(const CampaignConfig& config);

/// Number of cases the config will produce.
std::size_t predicted_case_count(const CampaignConfig& config);

std::string report_to_json(const CampaignReport& report);
std::string report_to_csv(const CampaignReport& report);
CampaignReport report_from_json(const std::string& text);

/// Writes the report in the requested format; throws IoFailure.
void emit_report(const CampaignReport& report, ReportFormat format, const std::string& path);

/// %.17g, or "null" for non-finite values.
std::string format_number(double v);

}  // namespace ultra::harness
