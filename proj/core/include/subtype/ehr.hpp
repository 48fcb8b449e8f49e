#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subtype {

enum class Gender { F, M, NK, NS };
enum class Outcome { survived, died };
enum class Consciousness { alert, limited };

const char* to_string(Gender g);
const char* to_string(Outcome o);
const char* to_string(Consciousness c);
std::optional<Gender> gender_from_string(const std::string& s);
std::optional<Outcome> outcome_from_string(const std::string& s);
std::optional<Consciousness> consciousness_from_string(const std::string& s);

struct AdmissionRecord {
  std::string admission_id;
  std::string patient_id;
  Gender gender = Gender::NK;
  int age = 0;
  std::int64_t admit_ts = 0;      // UTC seconds
  std::int64_t discharge_ts = 0;  // UTC seconds, >= admit_ts
  Outcome outcome = Outcome::survived;
  std::string icd10_primary;
};

/// One simultaneous reading of the six vitals. A VitalsSet is complete by
/// definition; rows with any vital missing are rejected at parse.
struct VitalsSet {
  std::string admission_id;
  std::int64_t ts = 0;
  double temperature = 0;  // °C, [25, 45]
  double sbp = 0;          // mmHg, [30, 300]
  double heart_rate = 0;   // bpm, [10, 300]
  double sats = 0;         // %, [0, 100]
  double resp_rate = 0;    // bpm, [1, 90]
  Consciousness consciousness = Consciousness::alert;
  std::optional<int> news;  // 0-20 when present
};

struct RejectedRow {
  std::string source;  // "admissions" or "vitals"
  std::size_t line = 0;
  std::string reason;
};

struct ParsedEhr {
  std::vector<AdmissionRecord> admissions;
  std::vector<VitalsSet> vitals;
  std::vector<RejectedRow> rejects;
};

inline constexpr const char* kAdmissionsHeader =
    "admission_id,patient_id,gender,age,admit_ts,discharge_ts,outcome,icd10_primary";
inline constexpr const char* kVitalsHeader =
    "admission_id,ts,temperature,sbp,heart_rate,sats,resp_rate,consciousness,news";

/// Parses both CSV streams. Malformed rows are collected in `rejects` with
/// line number and reason. Missing/bad headers and duplicate admission ids
/// are fatal (std::runtime_error).
ParsedEhr parse_admissions(std::istream& admissions_csv, std::istream& vitals_csv);

struct CohortRow {
  AdmissionRecord admission;
  VitalsSet first_vitals;
  double stay_hours() const {
    return static_cast<double>(admission.discharge_ts - admission.admit_ts) / 3600.0;
  }
};

struct Cohort {
  std::vector<CohortRow> rows;
  std::map<std::string, std::size_t> filter_log;  // exclusions keyed by rule
  std::string filter_log_json() const;
};

/// Retains an admission iff the stay is >= 2h (checked first) and at least
/// one VitalsSet falls within 24h of admission; the earliest such set is
/// attached. Throws if nothing survives.
Cohort filter_cohort(const std::vector<AdmissionRecord>& records,
                     const std::vector<VitalsSet>& vitals);

struct SummaryStat {
  double mean = 0;
  double sd = 0;  // population (divisor n)
};

struct SummaryTable {
  std::size_t n_patients = 0;
  std::size_t n_admissions = 0;
  double pct_female = 0;
  SummaryStat age, los_hours, news, temperature, sbp, heart_rate, sats, resp_rate;
  double mortality_pct = 0;
  double pct_limited_consciousness = 0;
};

/// Table-1-style cohort statistics. NEWS is averaged over rows where it is
/// present. Throws on an empty cohort.
SummaryTable cohort_summary(const Cohort& cohort);

/// Mean and population standard deviation (divisor n).
SummaryStat mean_sd(const std::vector<double>& values);

}  // namespace subtype
