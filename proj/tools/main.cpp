#include "report.hpp"

#include "dramecc/analytics.hpp"
#include "dramecc/sim_harness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

using namespace dramecc;
using namespace dramecc::cli;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Output {
    std::string path;
    std::string format = "csv";
    bool quiet = false;

    Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }

    template <typename Writer>
    void emit(Writer&& write) const
    {
        if (path.empty()) {
            write(std::cout);
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        write(out);
        out.close();
        if (!out)
            throw std::runtime_error("failed writing '" + path + "'");
    }

    // human-readable lines go to stdout only when the report does not
    std::FILE* summary_stream() const { return path.empty() ? stderr : stdout; }
};

void add_output_options(CLI::App* cmd, Output& out)
{
    cmd->add_option("--out", out.path, "Report file (default: stdout)");
    cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--quiet", out.quiet, "No progress or summary output");
}

std::vector<std::string> scheme_names()
{
    std::vector<std::string> v;
    for (SchemeId s : kAllSchemes)
        v.emplace_back(scheme_name(s));
    return v;
}

std::vector<std::string> fault_names()
{
    std::vector<std::string> v;
    for (FaultMode m : kAllFaultModes)
        v.emplace_back(fault_mode_name(m));
    return v;
}

std::string command_line(int argc, char** argv)
{
    std::string s = "dramecc";
    for (int i = 1; i < argc; ++i) {
        s += ' ';
        s += argv[i];
    }
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Progress progress_printer(const Output& out)
{
    if (out.quiet)
        return {};
    return [](const std::string& what) { std::fprintf(stderr, "running %s\n", what.c_str()); };
}

struct SimulateArgs {
    std::string scheme;
    std::string fault;
    std::string hash{kDefaultHashName};
    std::uint64_t trials = 1'000'000;
    int iterations = 10;
    std::uint64_t seed = 1;
    int workers = 0;
    bool address_protect = false;
    std::string pin_scope = "all-beats";
    Output out;
};

int run_simulate(const SimulateArgs& a, const std::string& command)
{
    ExperimentConfig c;
    c.scheme = scheme_by_name(a.scheme);
    c.fault_mode = fault_mode_by_name(a.fault);
    c.hash = hash_spec_by_name(a.hash);
    c.trials_per_iteration = a.trials;
    c.iterations = a.iterations;
    c.master_seed = a.seed;
    c.address_protect = a.address_protect;
    c.pin_scope = pin_scope_by_name(a.pin_scope);
    c.workers = a.workers;
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const auto t0 = std::chrono::steady_clock::now();
    const TrialStats stats = run_experiment(c);
    const ReportRow row = make_report_row(c, stats, seconds_since(t0));

    ReportHeader h;
    h.kind = "simulate";
    h.command = command;
    h.config = Json{{"scheme", row.scheme},
                    {"fault_mode", row.fault_mode},
                    {"hash", row.hash},
                    {"trials", row.trials},
                    {"iterations", row.iterations},
                    {"seed", row.seed},
                    {"address_protect", c.address_protect},
                    {"pin_scope", a.pin_scope}};
    a.out.emit([&](std::ostream& os) { write_simulate(os, a.out.fmt(), h, row, stats); });
    if (!a.out.quiet)
        std::fprintf(a.out.summary_stream(), "%s / %s: CF %.4f%%  SDC %.4f%% (std %.4f, %llu events)  %.1fs\n",
                     row.scheme.c_str(), row.fault_mode.c_str(), row.cf_pct_mean, row.sdc_pct_mean,
                     row.sdc_pct_std, static_cast<unsigned long long>(row.sdc_event_count),
                     row.wall_time_seconds);
    return 0;
}

struct ReproduceArgs {
    std::string table;
    double scale = 0.001;
    int iterations = kTableIterations;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string hash{kDefaultHashName};
    std::string pin_scope = "all-beats";
    Output out;
};

int run_reproduce(const ReproduceArgs& a, const std::string& command)
{
    std::uint64_t trials = 0;
    try {
        trials = trials_for_scale(a.scale);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.iterations < 1)
        throw UsageError("iterations must be at least 1");

    ReportHeader h;
    h.command = command;
    h.config = Json{{"table", a.table},    {"scale", a.scale},
                    {"trials", trials},    {"iterations", a.iterations},
                    {"seed", a.seed},      {"hash", a.hash},
                    {"pin_scope", a.pin_scope}};
    FILE* sum = a.out.summary_stream();
    bool all_within = true;

    if (a.table == "table1") {
        h.kind = "reproduce-table1";
        h.config.erase("hash");
        h.config.erase("pin_scope");
        const auto rows = reproduce_miscorrection_table(trials, a.iterations, a.seed, a.workers, progress_printer(a.out));
        a.out.emit([&](std::ostream& os) { write_miscorrection_table(os, a.out.fmt(), h, rows); });
        if (!a.out.quiet)
            std::fprintf(sum, "%-3s %10s %12s %10s %10s %12s %s\n", "e", "reference", "miscorrected", "analytic",
                         "3 sigma", "undetected", "flag");
        for (const auto& r : rows) {
            all_within &= r.within;
            if (!a.out.quiet)
                std::fprintf(sum, "%-3d %10s %12.4f %10.4f %10.4f %12llu %s\n", r.e,
                             to_string(r.ref_miscorrected).c_str(), r.stats.miscorrected_pct().mean,
                             100.0 * to_double(r.analytic), 3 * r.sigma_pct,
                             static_cast<unsigned long long>(r.stats.totals().undetected),
                             r.within ? "pass" : "FAIL");
        }
    } else {
        h.kind = "reproduce-table5";
        const HashSpec hash = hash_spec_by_name(a.hash);
        const auto rows = reproduce_fault_table(trials, a.iterations, a.seed, a.workers, hash,
                                                pin_scope_by_name(a.pin_scope), progress_printer(a.out));
        a.out.emit([&](std::ostream& os) { write_fault_table(os, a.out.fmt(), h, rows); });
        if (!a.out.quiet)
            std::fprintf(sum, "%-13s %-15s %10s %10s %10s %10s %s\n", "scheme", "fault", "reference", "sdc %",
                         "3 sigma", "cf %", "flag");
        for (const auto& r : rows) {
            all_within &= r.within;
            if (!a.out.quiet)
                std::fprintf(sum, "%-13s %-15s %10s %10.4f %10.4f %10.4f %s\n",
                             std::string(scheme_name(r.cell.scheme)).c_str(), r.cell.row.c_str(),
                             to_string(r.cell.ref_sdc).c_str(), r.sdc_pct.mean, 3 * r.sigma_pct, r.cf_pct.mean,
                             r.within ? "pass" : "FAIL");
        }
    }
    if (!a.out.quiet)
        std::fprintf(sum, "%s\n", all_within ? "all rows within tolerance" : "some rows outside tolerance");
    return 0;
}

struct AnalyticArgs {
    int n = 18;
    int k = 16;
    int m = 8;
    int e = 2;
    int digits = 8;
};

int run_analytic(const AnalyticArgs& a)
{
    const CodespaceModel model{a.n, a.k, a.m, a.e};
    try {
        model.validate();
        if (a.e < 2)
            throw std::invalid_argument("error weight e must be at least 2");
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    const auto line = [&](const char* label, const Rational& v, const char* note = "") {
        std::printf("%-22s %s  (%s)%s\n", label, to_string(v).c_str(), to_decimal(v, a.digits).c_str(), note);
    };
    std::printf("RS(%d,%d) over GF(2^%d), e=%d, minimum distance %d\n", a.n, a.k, a.m, a.e, model.min_distance());
    line("codewords within e", codewords_within(model));
    const MiscorrectionTerms t = miscorrection_terms(model);
    line("term at distance e", t.at_e, t.at_e_vacuous ? " vacuous" : "");
    line("term at distance e-1", t.at_e_minus_1, t.at_e_minus_1_vacuous ? " vacuous" : "");
    line("term at distance e+1", t.at_e_plus_1, t.at_e_plus_1_vacuous ? " vacuous" : "");
    std::printf("%-22s %s\n", "error patterns", error_patterns(model).str().c_str());
    line("miscorrection fraction", miscorrection_fraction(model));
    return 0;
}

struct AddressArgs {
    std::uint64_t trials = 10'000'000;
    int iterations = 1;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string hash{kDefaultHashName};
    Output out;
};

int run_address(const AddressArgs& a, const std::string& command)
{
    if (a.trials == 0 || a.iterations < 1)
        throw UsageError("trials and iterations must be at least 1");
    AddressReport r;
    r.hash = a.hash;
    r.trials = a.trials;
    r.iterations = a.iterations;
    r.seed = a.seed;
    const auto t0 = std::chrono::steady_clock::now();
    r.stats = run_address_fault_experiment(a.trials, a.iterations, a.seed, hash_spec_by_name(a.hash), a.workers);
    r.wall_time_seconds = seconds_since(t0);

    ReportHeader h;
    h.kind = "address";
    h.command = command;
    h.config = Json{{"hash", a.hash}, {"trials", a.trials}, {"iterations", a.iterations}, {"seed", a.seed}};
    a.out.emit([&](std::ostream& os) { write_address(os, a.out.fmt(), h, r); });
    if (!a.out.quiet) {
        const AddressCounts t = r.stats.totals();
        std::fprintf(a.out.summary_stream(), "%s: detected %llu  sdc %llu  (ideal 32-bit check expects %.4f)\n",
                     a.hash.c_str(), static_cast<unsigned long long>(t.detected),
                     static_cast<unsigned long long>(t.sdc), r.expected_sdc());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chipkill ECC fault-injection simulator"};
    app.set_version_flag("--version", DRAMECC_VERSION);
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one (scheme, fault mode) experiment");
    simulate->add_option("--scheme", sim.scheme, "ECC scheme")->required()->check(CLI::IsMember(scheme_names()));
    simulate->add_option("--fault", sim.fault, "Fault mode")->required()->check(CLI::IsMember(fault_names()));
    simulate->add_option("--hash", sim.hash, "Hash for sscmsd")->check(CLI::IsMember(hash_names()));
    simulate->add_option("--trials", sim.trials, "Trials per iteration")->check(CLI::PositiveNumber);
    simulate->add_option("--iterations", sim.iterations, "Iterations")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "Master seed");
    simulate->add_option("--workers", sim.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    simulate->add_flag("--address-protect", sim.address_protect, "Fold an 8-byte address into the sscmsd hash");
    simulate->add_option("--pin-scope", sim.pin_scope, "Extent of pin faults")
        ->check(CLI::IsMember({"all-beats", "window"}));
    add_output_options(simulate, sim.out);

    ReproduceArgs rep;
    auto* reproduce = app.add_subcommand("reproduce", "Rerun a reference table and compare");
    reproduce->add_option("table", rep.table, "table1 or table5")->required()->check(
        CLI::IsMember({"table1", "table5"}));
    reproduce->add_option("--scale", rep.scale, "Fraction of 1e9 trials per iteration, in (0, 1]");
    reproduce->add_option("--iterations", rep.iterations, "Iterations");
    reproduce->add_option("--seed", rep.seed, "Master seed");
    reproduce->add_option("--workers", rep.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    reproduce->add_option("--hash", rep.hash, "Hash for sscmsd")->check(CLI::IsMember(hash_names()));
    reproduce->add_option("--pin-scope", rep.pin_scope, "Extent of pin faults")
        ->check(CLI::IsMember({"all-beats", "window"}));
    add_output_options(reproduce, rep.out);

    AnalyticArgs an;
    auto* analytic = app.add_subcommand("analytic", "Evaluate the sphere-counting miscorrection model");
    analytic->add_option("--n", an.n, "Code length in symbols");
    analytic->add_option("--k", an.k, "Data symbols");
    analytic->add_option("--m", an.m, "Bits per symbol");
    analytic->add_option("--e", an.e, "Symbol errors");
    analytic->add_option("--digits", an.digits, "Decimal places")->check(CLI::Range(0, 200));

    AddressArgs ad;
    auto* address = app.add_subcommand("address", "Corrupt the address bits under the data+address hash");
    address->add_option("--trials", ad.trials, "Trials per iteration")->check(CLI::PositiveNumber);
    address->add_option("--iterations", ad.iterations, "Iterations")->check(CLI::PositiveNumber);
    address->add_option("--seed", ad.seed, "Master seed");
    address->add_option("--workers", ad.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    address->add_option("--hash", ad.hash, "Hash")->check(CLI::IsMember(hash_names()));
    add_output_options(address, ad.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string command = command_line(argc, argv);
    try {
        if (*simulate)
            return run_simulate(sim, command);
        if (*reproduce)
            return run_reproduce(rep, command);
        if (*analytic)
            return run_analytic(an);
        if (*address)
            return run_address(ad, command);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
