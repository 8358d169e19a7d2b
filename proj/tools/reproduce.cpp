#include "reproduce.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dramecc::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

constexpr Reference kZero{0, false};
constexpr Reference kTiny{0.1, true};

} // namespace

std::string to_string(Reference ref)
{
    std::ostringstream os;
    os << (ref.below ? "<" : "") << ref.pct;
    return os.str();
}

std::uint64_t trials_for_scale(double scale)
{
    if (!(scale > 0 && scale <= 1))
        throw std::invalid_argument("scale must be in (0, 1]");
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(scale * kFullScaleTrials)));
}

double binomial_sigma_pct(double ref_pct, double measured_pct, double samples)
{
    const double p = std::max(ref_pct, measured_pct) / 100.0;
    if (samples <= 0)
        return 0;
    return 100.0 * std::sqrt(p * (1 - p) / samples);
}

bool within_3sigma(Reference ref, double measured_pct, double sigma_pct)
{
    if (ref.below)
        return measured_pct < ref.pct + 3 * sigma_pct;
    return std::abs(measured_pct - ref.pct) <= 3 * sigma_pct + 0.05;
}

std::vector<MiscorrectionRow> reproduce_miscorrection_table(std::uint64_t trials, int iterations, std::uint64_t seed,
                                                            int workers, const Progress& progress)
{
    struct Ref {
        int e;
        Reference mis, det, und;
    };
    const Ref refs[] = {
        {2, {6.3, false}, {93.7, false}, kZero},
        {3, {6.9, false}, {93.1, false}, kZero},
        {4, {7.0, false}, {93.0, false}, kZero},
    };
    std::vector<MiscorrectionRow> rows;
    for (const Ref& r : refs) {
        if (progress)
            progress("RS(18,16) with " + std::to_string(r.e) + " random symbol errors");
        const auto start = std::chrono::steady_clock::now();
        MiscorrectionRow row;
        row.e = r.e;
        row.trials = trials;
        row.iterations = iterations;
        row.seed = seed;
        row.ref_miscorrected = r.mis;
        row.ref_detected = r.det;
        row.ref_undetected = r.und;
        row.analytic = miscorrection_fraction({18, 16, 8, r.e});
        row.stats = run_random_symbol_experiment(18, 16, r.e, trials, iterations, seed, workers);
        const double mis = row.stats.miscorrected_pct().mean;
        row.sigma_pct = binomial_sigma_pct(r.mis.pct, mis, static_cast<double>(trials) * iterations);
        row.within = within_3sigma(r.mis, mis, row.sigma_pct);
        row.wall_time_seconds = seconds_since(start);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableCell> fault_table_cells()
{
    const std::vector<FaultMode> single = {FaultMode::OneBit, FaultMode::OnePin, FaultMode::ChipRowBank,
                                           FaultMode::Column, FaultMode::Bus};
    const FaultMode multi[] = {FaultMode::CorrelatedBus, FaultMode::OneBitPlusBus, FaultMode::OneBitPlusChip,
                               FaultMode::OneBitPlusPin, FaultMode::PinPlusPin,    FaultMode::ChipPlusChip,
                               FaultMode::ThreeFault};
    std::vector<TableCell> cells;
    for (SchemeId s : kAllSchemes) {
        const auto refs = fault_table_references(s);
        cells.push_back({s, "single-lane", single, refs[0]});
        for (std::size_t i = 0; i < std::size(multi); ++i)
            cells.push_back({s, std::string(fault_mode_name(multi[i])), {multi[i]}, refs[i + 1]});
    }
    return cells;
}

std::vector<Reference> fault_table_references(SchemeId scheme)
{
    switch (scheme) {
    case SchemeId::Baseline:
        return {kZero, {2, false}, {4, false}, {6, false}, {7.6, false}, {3.5, false}, kTiny, kTiny};
    case SchemeId::ExtBaseline:
        return {kZero, {0.9, false}, {2, false}, {3.2, false}, {3, false}, {1.6, false}, kTiny, kTiny};
    case SchemeId::BambooQPC:
        return {kZero, {11.4, false}, {11.1, false}, {11, false}, kZero, kZero, {11, false}, {11, false}};
    case SchemeId::BambooExt:
        return {kZero, {12.3, false}, kZero, kZero, kZero, kZero, {12, false}, {12, false}};
    case SchemeId::SSCMSD:
        return std::vector<Reference>(8, kZero);
    }
    return {};
}

FaultTableRow run_fault_cell(const TableCell& cell, std::uint64_t trials, int iterations, std::uint64_t seed,
                             int workers, const HashSpec& hash, PinFaultScope pin_scope)
{
    const auto start = std::chrono::steady_clock::now();
    FaultTableRow row;
    row.cell = cell;
    row.hash = hash.name;
    row.trials = trials;
    row.iterations = iterations;
    row.seed = seed;
    row.per_iteration.assign(static_cast<std::size_t>(iterations), OutcomeCounts{});
    for (FaultMode m : cell.modes) {
        ExperimentConfig c;
        c.scheme = cell.scheme;
        c.fault_mode = m;
        c.hash = hash;
        c.trials_per_iteration = trials;
        c.iterations = iterations;
        c.master_seed = seed;
        c.pin_scope = pin_scope;
        c.workers = workers;
        const TrialStats st = run_experiment(c);
        for (std::size_t i = 0; i < row.per_iteration.size(); ++i)
            row.per_iteration[i] += st.per_iteration[i];
    }
    TrialStats pooled;
    pooled.trials_per_iteration = trials * cell.modes.size();
    pooled.per_iteration = row.per_iteration;
    row.sdc_pct = pooled.sdc_pct();
    row.cf_pct = pooled.cf_pct();
    row.sdc_events = pooled.sdc_events();
    row.sigma_pct = binomial_sigma_pct(cell.ref_sdc.pct, row.sdc_pct.mean,
                                       static_cast<double>(pooled.totals().total()));
    row.within = within_3sigma(cell.ref_sdc, row.sdc_pct.mean, row.sigma_pct);
    row.wall_time_seconds = seconds_since(start);
    return row;
}

std::vector<FaultTableRow> reproduce_fault_table(std::uint64_t trials, int iterations, std::uint64_t seed,
                                                 int workers, const HashSpec& hash, PinFaultScope pin_scope,
                                                 const Progress& progress)
{
    std::vector<FaultTableRow> rows;
    for (const TableCell& cell : fault_table_cells()) {
        if (progress)
            progress(std::string(scheme_name(cell.scheme)) + " / " + cell.row);
        rows.push_back(run_fault_cell(cell, trials, iterations, seed, workers, hash, pin_scope));
    }
    return rows;
}

} // namespace dramecc::cli
