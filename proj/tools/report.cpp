#include "report.hpp"

#include <cmath>
#include <cstdio>

#ifndef DRAMECC_VERSION
#define DRAMECC_VERSION "unknown"
#endif

namespace dramecc::cli {

namespace {

std::string fixed(double v, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Json header_json(const ReportHeader& h)
{
    Json j;
    j["tool"] = "dramecc";
    j["version"] = DRAMECC_VERSION;
    j["kind"] = h.kind;
    j["command"] = h.command;
    j["config"] = h.config;
    return j;
}

void write_csv_header(std::ostream& os, const ReportHeader& h)
{
    os << "# dramecc " << DRAMECC_VERSION << '\n';
    os << "# kind: " << h.kind << '\n';
    os << "# command: " << h.command << '\n';
    for (const auto& [key, value] : h.config.items())
        os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

void write_csv_line(std::ostream& os, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << fields[i];
    os << '\n';
}

Json summary_json(const Summary& s)
{
    return Json{{"mean", s.mean}, {"std", s.stddev}};
}

Json reference_json(Reference r)
{
    return Json{{"pct", r.pct}, {"below", r.below}};
}

Json counts_json(const OutcomeCounts& c)
{
    return Json{{"no_error", c.no_error}, {"corrected", c.corrected}, {"due", c.due}, {"sdc", c.sdc}};
}

} // namespace

const std::vector<std::string>& report_columns()
{
    static const std::vector<std::string> cols = {
        "scheme",       "fault_mode",  "hash",         "trials",          "iterations",       "seed",
        "cf_pct_mean",  "sdc_pct_mean", "sdc_pct_std", "sdc_event_count", "wall_time_seconds"};
    return cols;
}

ReportRow make_report_row(const ExperimentConfig& config, const TrialStats& stats, double wall_time_seconds)
{
    ReportRow r;
    r.scheme = std::string(scheme_name(config.scheme));
    r.fault_mode = std::string(fault_mode_name(config.fault_mode));
    r.hash = config.hash.name;
    r.trials = config.trials_per_iteration;
    r.iterations = config.iterations;
    r.seed = config.master_seed;
    r.cf_pct_mean = stats.cf_pct().mean;
    const Summary sdc = stats.sdc_pct();
    r.sdc_pct_mean = sdc.mean;
    r.sdc_pct_std = sdc.stddev;
    r.sdc_event_count = stats.sdc_events();
    r.wall_time_seconds = wall_time_seconds;
    return r;
}

double AddressReport::expected_sdc() const
{
    return static_cast<double>(trials) * iterations / 4294967296.0;
}

void write_simulate(std::ostream& os, Format f, const ReportHeader& h, const ReportRow& r, const TrialStats& stats)
{
    if (f == Format::Csv) {
        write_csv_header(os, h);
        write_csv_line(os, report_columns());
        write_csv_line(os, {r.scheme, r.fault_mode, r.hash, std::to_string(r.trials), std::to_string(r.iterations),
                            std::to_string(r.seed), fixed(r.cf_pct_mean), fixed(r.sdc_pct_mean),
                            fixed(r.sdc_pct_std), std::to_string(r.sdc_event_count),
                            fixed(r.wall_time_seconds, 3)});
        return;
    }
    Json j = header_json(h);
    Json row;
    row["scheme"] = r.scheme;
    row["fault_mode"] = r.fault_mode;
    row["hash"] = r.hash;
    row["trials"] = r.trials;
    row["iterations"] = r.iterations;
    row["seed"] = r.seed;
    row["cf_pct_mean"] = r.cf_pct_mean;
    row["sdc_pct_mean"] = r.sdc_pct_mean;
    row["sdc_pct_std"] = r.sdc_pct_std;
    row["sdc_event_count"] = r.sdc_event_count;
    row["wall_time_seconds"] = r.wall_time_seconds;
    row["due_pct"] = summary_json(stats.due_pct());
    row["corrected_pct"] = summary_json(stats.corrected_pct());
    row["per_iteration"] = Json::array();
    for (const auto& c : stats.per_iteration)
        row["per_iteration"].push_back(counts_json(c));
    j["rows"] = Json::array({row});
    os << j.dump(2) << '\n';
}

void write_miscorrection_table(std::ostream& os, Format f, const ReportHeader& h,
                               const std::vector<MiscorrectionRow>& rows)
{
    if (f == Format::Csv) {
        write_csv_header(os, h);
        write_csv_line(os, {"e", "trials", "iterations", "seed", "ref_miscorrected_pct", "miscorrected_pct_mean",
                            "miscorrected_pct_std", "analytic_pct", "sigma_pct", "within_3sigma",
                            "ref_detected_pct", "detected_pct_mean", "ref_undetected_pct", "undetected_pct_mean",
                            "undetected_count", "wall_time_seconds"});
        for (const auto& r : rows) {
            const Summary mis = r.stats.miscorrected_pct();
            write_csv_line(os, {std::to_string(r.e), std::to_string(r.trials), std::to_string(r.iterations),
                                std::to_string(r.seed), to_string(r.ref_miscorrected), fixed(mis.mean),
                                fixed(mis.stddev), fixed(100.0 * to_double(r.analytic)), fixed(r.sigma_pct),
                                r.within ? "pass" : "fail", to_string(r.ref_detected),
                                fixed(r.stats.detected_pct().mean), to_string(r.ref_undetected),
                                fixed(r.stats.undetected_pct().mean), std::to_string(r.stats.totals().undetected),
                                fixed(r.wall_time_seconds, 3)});
        }
        return;
    }
    Json j = header_json(h);
    j["rows"] = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["e"] = r.e;
        row["trials"] = r.trials;
        row["iterations"] = r.iterations;
        row["seed"] = r.seed;
        row["reference"] = Json{{"miscorrected", reference_json(r.ref_miscorrected)},
                                {"detected", reference_json(r.ref_detected)},
                                {"undetected", reference_json(r.ref_undetected)}};
        row["analytic_fraction"] = dramecc::to_string(r.analytic);
        row["analytic_pct"] = 100.0 * to_double(r.analytic);
        row["miscorrected_pct"] = summary_json(r.stats.miscorrected_pct());
        row["detected_pct"] = summary_json(r.stats.detected_pct());
        row["undetected_pct"] = summary_json(r.stats.undetected_pct());
        row["sigma_pct"] = r.sigma_pct;
        row["within_3sigma"] = r.within;
        row["wall_time_seconds"] = r.wall_time_seconds;
        row["per_iteration"] = Json::array();
        for (const auto& c : r.stats.per_iteration)
            row["per_iteration"].push_back(Json{{"corrected", c.corrected},
                                                {"miscorrected", c.miscorrected},
                                                {"detected", c.detected},
                                                {"undetected", c.undetected}});
        j["rows"].push_back(row);
    }
    os << j.dump(2) << '\n';
}

void write_fault_table(std::ostream& os, Format f, const ReportHeader& h, const std::vector<FaultTableRow>& rows)
{
    if (f == Format::Csv) {
        write_csv_header(os, h);
        write_csv_line(os, {"scheme", "fault_row", "hash", "trials", "iterations", "seed", "ref_sdc_pct",
                            "sdc_pct_mean", "sdc_pct_std", "cf_pct_mean", "sdc_event_count", "sigma_pct",
                            "within_3sigma", "wall_time_seconds"});
        for (const auto& r : rows)
            write_csv_line(os, {std::string(scheme_name(r.cell.scheme)), r.cell.row, r.hash,
                                std::to_string(r.trials * r.cell.modes.size()), std::to_string(r.iterations),
                                std::to_string(r.seed), to_string(r.cell.ref_sdc), fixed(r.sdc_pct.mean),
                                fixed(r.sdc_pct.stddev), fixed(r.cf_pct.mean), std::to_string(r.sdc_events),
                                fixed(r.sigma_pct), r.within ? "pass" : "fail", fixed(r.wall_time_seconds, 3)});
        return;
    }
    Json j = header_json(h);
    j["rows"] = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["scheme"] = std::string(scheme_name(r.cell.scheme));
        row["fault_row"] = r.cell.row;
        row["fault_modes"] = Json::array();
        for (FaultMode m : r.cell.modes)
            row["fault_modes"].push_back(std::string(fault_mode_name(m)));
        row["hash"] = r.hash;
        row["trials"] = r.trials * r.cell.modes.size();
        row["iterations"] = r.iterations;
        row["seed"] = r.seed;
        row["reference_sdc"] = reference_json(r.cell.ref_sdc);
        row["sdc_pct"] = summary_json(r.sdc_pct);
        row["cf_pct"] = summary_json(r.cf_pct);
        row["sdc_event_count"] = r.sdc_events;
        row["sigma_pct"] = r.sigma_pct;
        row["within_3sigma"] = r.within;
        row["wall_time_seconds"] = r.wall_time_seconds;
        row["per_iteration"] = Json::array();
        for (const auto& c : r.per_iteration)
            row["per_iteration"].push_back(counts_json(c));
        j["rows"].push_back(row);
    }
    os << j.dump(2) << '\n';
}

void write_address(std::ostream& os, Format f, const ReportHeader& h, const AddressReport& r)
{
    const AddressCounts t = r.stats.totals();
    const Summary per_it = r.stats.sdc_count();
    if (f == Format::Csv) {
        write_csv_header(os, h);
        write_csv_line(os, {"hash", "trials", "iterations", "seed", "detected_count", "sdc_count",
                            "sdc_per_iteration_mean", "sdc_per_iteration_std", "expected_sdc_count",
                            "wall_time_seconds"});
        write_csv_line(os, {r.hash, std::to_string(r.trials), std::to_string(r.iterations), std::to_string(r.seed),
                            std::to_string(t.detected), std::to_string(t.sdc), fixed(per_it.mean),
                            fixed(per_it.stddev), fixed(r.expected_sdc()), fixed(r.wall_time_seconds, 3)});
        return;
    }
    Json j = header_json(h);
    Json row;
    row["hash"] = r.hash;
    row["trials"] = r.trials;
    row["iterations"] = r.iterations;
    row["seed"] = r.seed;
    row["detected_count"] = t.detected;
    row["sdc_count"] = t.sdc;
    row["sdc_per_iteration"] = summary_json(per_it);
    row["expected_sdc_count"] = r.expected_sdc();
    row["wall_time_seconds"] = r.wall_time_seconds;
    row["per_iteration"] = Json::array();
    for (const auto& c : r.stats.per_iteration)
        row["per_iteration"].push_back(Json{{"detected", c.detected}, {"sdc", c.sdc}});
    j["rows"] = Json::array({row});
    os << j.dump(2) << '\n';
}

} // namespace dramecc::cli
