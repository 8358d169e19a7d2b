#pragma once

#include "dramecc/analytics.hpp"
#include "dramecc/sim_harness.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dramecc::cli {

inline constexpr double kFullScaleTrials = 1e9;
inline constexpr int kTableIterations = 10;

/// A published percentage. `below` marks values reported as "< pct".
struct Reference {
    double pct = 0;
    bool below = false;
};

std::string to_string(Reference ref);

/// Trials per iteration for a scale in (0, 1]; throws std::invalid_argument otherwise.
std::uint64_t trials_for_scale(double scale);

/// Binomial standard deviation, in percentage points, of a rate estimated
/// from `samples` trials. Uses the larger of the reference and measured rates.
double binomial_sigma_pct(double ref_pct, double measured_pct, double samples);

/// |measured - ref| <= 3 sigma + half a unit of the reference's last digit
/// (0.05 pp). "< x" references need measured < x + 3 sigma.
bool within_3sigma(Reference ref, double measured_pct, double sigma_pct);

struct MiscorrectionRow {
    int e = 0;
    std::uint64_t trials = 0;
    int iterations = 0;
    std::uint64_t seed = 0;
    Reference ref_miscorrected;
    Reference ref_detected;
    Reference ref_undetected;
    Rational analytic;
    SymbolErrorStats stats;
    double sigma_pct = 0;
    bool within = false;
    double wall_time_seconds = 0;
};

struct TableCell {
    SchemeId scheme = SchemeId::Baseline;
    std::string row;
    std::vector<FaultMode> modes; ///< pooled when more than one
    Reference ref_sdc;
};

/// The 8 x 5 grid: a pooled single-lane row followed by the seven multi-fault rows.
std::vector<TableCell> fault_table_cells();

/// Reference SDC percentages for one scheme, in fault_table_cells() row order.
std::vector<Reference> fault_table_references(SchemeId scheme);

struct FaultTableRow {
    TableCell cell;
    std::string hash;
    std::uint64_t trials = 0; ///< per iteration and per pooled mode
    int iterations = 0;
    std::uint64_t seed = 0;
    std::vector<OutcomeCounts> per_iteration; ///< summed over pooled modes
    Summary sdc_pct;
    Summary cf_pct;
    std::uint64_t sdc_events = 0;
    double sigma_pct = 0;
    bool within = false;
    double wall_time_seconds = 0;
};

using Progress = std::function<void(const std::string&)>;

std::vector<MiscorrectionRow> reproduce_miscorrection_table(std::uint64_t trials, int iterations, std::uint64_t seed,
                                                            int workers, const Progress& progress = {});

std::vector<FaultTableRow> reproduce_fault_table(std::uint64_t trials, int iterations, std::uint64_t seed,
                                                 int workers, const HashSpec& hash, PinFaultScope pin_scope,
                                                 const Progress& progress = {});

FaultTableRow run_fault_cell(const TableCell& cell, std::uint64_t trials, int iterations, std::uint64_t seed,
                             int workers, const HashSpec& hash, PinFaultScope pin_scope);

} // namespace dramecc::cli
