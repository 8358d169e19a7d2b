#pragma once

#include "reproduce.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace dramecc::cli {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

/// Provenance carried by every report: tool version, the command line and
/// the resolved configuration (including the seed).
struct ReportHeader {
    std::string kind;
    std::string command;
    Json config = Json::object();
};

/// One simulated (scheme, fault mode) experiment.
struct ReportRow {
    std::string scheme;
    std::string fault_mode;
    std::string hash;
    std::uint64_t trials = 0;
    int iterations = 0;
    std::uint64_t seed = 0;
    double cf_pct_mean = 0;
    double sdc_pct_mean = 0;
    double sdc_pct_std = 0;
    std::uint64_t sdc_event_count = 0;
    double wall_time_seconds = 0;
};

/// Fixed CSV column order for simulate reports.
const std::vector<std::string>& report_columns();

ReportRow make_report_row(const ExperimentConfig& config, const TrialStats& stats, double wall_time_seconds);

struct AddressReport {
    std::string hash;
    std::uint64_t trials = 0;
    int iterations = 0;
    std::uint64_t seed = 0;
    AddressStats stats;
    double wall_time_seconds = 0;

    /// Aliasing expectation for an ideal 32-bit check: trials * iterations / 2^32.
    double expected_sdc() const;
};

void write_simulate(std::ostream& os, Format f, const ReportHeader& h, const ReportRow& row, const TrialStats& stats);
void write_miscorrection_table(std::ostream& os, Format f, const ReportHeader& h,
                               const std::vector<MiscorrectionRow>& rows);
void write_fault_table(std::ostream& os, Format f, const ReportHeader& h, const std::vector<FaultTableRow>& rows);
void write_address(std::ostream& os, Format f, const ReportHeader& h, const AddressReport& report);

} // namespace dramecc::cli
