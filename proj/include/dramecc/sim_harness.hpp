#pragma once

#include "dramecc/crc_hash.hpp"
#include "dramecc/fault_model.hpp"
#include "dramecc/rng.hpp"
#include "dramecc/schemes.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace dramecc {

/// Mean and sample standard deviation of per-iteration values.
struct Summary {
    double mean = 0;
    double stddev = 0;
};

Summary summarize(const std::vector<double>& values);

/// 0 means one worker per hardware thread.
int resolve_workers(int requested) noexcept;

// ---------------------------------------------------------------------------
// Cache-line fault injection

enum class TrialOutcome { CfNoError, CfCorrected, CfDue, Sdc };

const char* to_string(TrialOutcome outcome) noexcept;

struct ExperimentConfig {
    SchemeId scheme = SchemeId::Baseline;
    FaultMode fault_mode = FaultMode::OneBit;
    HashSpec hash = hash_spec_by_name(kDefaultHashName);
    std::uint64_t trials_per_iteration = 1'000'000;
    int iterations = 10;
    std::uint64_t master_seed = 1;
    bool address_protect = false;
    PinFaultScope pin_scope = PinFaultScope::AllBeats;
    int workers = 0;

    /// Throws std::invalid_argument on zero trials or iterations.
    void validate() const;
};

struct OutcomeCounts {
    std::uint64_t no_error = 0;
    std::uint64_t corrected = 0;
    std::uint64_t due = 0;
    std::uint64_t sdc = 0;

    std::uint64_t total() const noexcept { return no_error + corrected + due + sdc; }
    std::uint64_t cf() const noexcept { return no_error + corrected + due; }
    void add(TrialOutcome o) noexcept;
    OutcomeCounts& operator+=(const OutcomeCounts& o) noexcept;
    friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

struct TrialStats {
    std::uint64_t trials_per_iteration = 0;
    std::vector<OutcomeCounts> per_iteration;

    std::uint64_t sdc_events() const noexcept;
    OutcomeCounts totals() const noexcept;
    Summary sdc_pct() const;
    Summary cf_pct() const;
    Summary due_pct() const;
    Summary corrected_pct() const;
};

/// Reusable per-thread state for cache-line trials; no allocation per trial.
class TrialRunner {
public:
    explicit TrialRunner(const ExperimentConfig& config);

    TrialOutcome run(std::uint64_t iteration, std::uint64_t trial_index);

private:
    ExperimentConfig config_;
    Scheme scheme_;
    StoredLine line_;
    ErrorMask mask_;
    LineVerdict verdict_;
};

/// One trial: random line (and address), encode, inject, decode, classify.
/// Its random stream depends only on (master_seed, iteration, trial_index).
TrialOutcome run_trial(const ExperimentConfig& config, std::uint64_t iteration, std::uint64_t trial_index);

/// Bit-identical for a given config regardless of `workers`.
TrialStats run_experiment(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Random e-symbol errors on a bare RS codeword

struct SymbolErrorCounts {
    std::uint64_t corrected = 0;    ///< decoder restored the original codeword
    std::uint64_t miscorrected = 0; ///< decoder moved to a different codeword
    std::uint64_t detected = 0;     ///< decoder flagged the word uncorrectable
    std::uint64_t undetected = 0;   ///< error pattern was itself a codeword

    std::uint64_t total() const noexcept { return corrected + miscorrected + detected + undetected; }
    SymbolErrorCounts& operator+=(const SymbolErrorCounts& o) noexcept;
    friend bool operator==(const SymbolErrorCounts&, const SymbolErrorCounts&) = default;
};

struct SymbolErrorStats {
    int n = 0;
    int k = 0;
    int e = 0;
    std::uint64_t trials_per_iteration = 0;
    std::vector<SymbolErrorCounts> per_iteration;

    SymbolErrorCounts totals() const noexcept;
    Summary miscorrected_pct() const;
    Summary detected_pct() const;
    Summary undetected_pct() const;
    Summary corrected_pct() const;
};

SymbolErrorStats run_random_symbol_experiment(int n, int k, int e, std::uint64_t trials, int iterations,
                                              std::uint64_t seed, int workers = 0);

// ---------------------------------------------------------------------------
// Address corruption against the data+address hash

struct AddressCounts {
    std::uint64_t detected = 0;
    std::uint64_t sdc = 0;

    std::uint64_t total() const noexcept { return detected + sdc; }
    AddressCounts& operator+=(const AddressCounts& o) noexcept;
    friend bool operator==(const AddressCounts&, const AddressCounts&) = default;
};

struct AddressStats {
    std::uint64_t trials_per_iteration = 0;
    std::vector<AddressCounts> per_iteration;

    AddressCounts totals() const noexcept;
    Summary sdc_count() const;
    Summary sdc_pct() const;
};

AddressStats run_address_fault_experiment(std::uint64_t trials, int iterations, std::uint64_t seed,
                                          const HashSpec& hash, int workers = 0);

} // namespace dramecc
