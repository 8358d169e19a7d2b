#include "dramecc/sim_harness.hpp"

#include "dramecc/rs_codec.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace dramecc {

namespace {

// Stream domains keep the three experiment kinds from sharing draws.
constexpr std::uint64_t kLineDomain = 0x4C494E45ull;
constexpr std::uint64_t kSymbolDomain = 0x53594D42ull;
constexpr std::uint64_t kAddressDomain = 0x41444452ull;

template <typename Counts, typename MakeWorker>
std::vector<Counts> run_parallel(std::uint64_t trials, int iterations, int workers, MakeWorker make_worker)
{
    const std::uint64_t total = trials * static_cast<std::uint64_t>(iterations);
    const auto nworkers =
        static_cast<std::uint64_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_workers(workers), total)));
    std::vector<std::vector<Counts>> partial(nworkers, std::vector<Counts>(static_cast<std::size_t>(iterations)));
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&](std::uint64_t w) {
        try {
            auto trial = make_worker();
            const std::uint64_t lo = total * w / nworkers;
            const std::uint64_t hi = total * (w + 1) / nworkers;
            auto& mine = partial[w];
            for (std::uint64_t i = lo; i < hi; ++i) {
                const std::uint64_t it = i / trials;
                trial(it, i % trials, mine[static_cast<std::size_t>(it)]);
            }
        } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    };

    if (nworkers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (std::uint64_t w = 0; w < nworkers; ++w)
            pool.emplace_back(body, w);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    std::vector<Counts> out(static_cast<std::size_t>(iterations));
    for (const auto& p : partial)
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += p[i];
    return out;
}

template <typename Counts, typename Field>
Summary pct_summary(const std::vector<Counts>& per_iteration, Field field)
{
    std::vector<double> v;
    v.reserve(per_iteration.size());
    for (const auto& c : per_iteration)
        v.push_back(c.total() == 0 ? 0.0 : 100.0 * static_cast<double>(field(c)) / static_cast<double>(c.total()));
    return summarize(v);
}

template <typename Counts>
Counts sum_counts(const std::vector<Counts>& per_iteration) noexcept
{
    Counts t;
    for (const auto& c : per_iteration)
        t += c;
    return t;
}

void validate_runs(std::uint64_t trials, int iterations)
{
    if (trials == 0)
        throw std::invalid_argument("trials per iteration must be at least 1");
    if (iterations < 1)
        throw std::invalid_argument("iterations must be at least 1");
}

} // namespace

Summary summarize(const std::vector<double>& values)
{
    Summary s;
    if (values.empty())
        return s;
    double sum = 0;
    for (double v : values)
        sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0;
        for (double v : values)
            sq += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    }
    return s;
}

int resolve_workers(int requested) noexcept
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

const char* to_string(TrialOutcome outcome) noexcept
{
    switch (outcome) {
    case TrialOutcome::CfNoError: return "cf-no-error";
    case TrialOutcome::CfCorrected: return "cf-corrected";
    case TrialOutcome::CfDue: return "cf-due";
    case TrialOutcome::Sdc: return "sdc";
    }
    return "?";
}

void ExperimentConfig::validate() const
{
    validate_runs(trials_per_iteration, iterations);
    if (address_protect && scheme != SchemeId::SSCMSD)
        throw std::invalid_argument("address protection needs the sscmsd scheme");
}

void OutcomeCounts::add(TrialOutcome o) noexcept
{
    switch (o) {
    case TrialOutcome::CfNoError: ++no_error; break;
    case TrialOutcome::CfCorrected: ++corrected; break;
    case TrialOutcome::CfDue: ++due; break;
    case TrialOutcome::Sdc: ++sdc; break;
    }
}

OutcomeCounts& OutcomeCounts::operator+=(const OutcomeCounts& o) noexcept
{
    no_error += o.no_error;
    corrected += o.corrected;
    due += o.due;
    sdc += o.sdc;
    return *this;
}

std::uint64_t TrialStats::sdc_events() const noexcept { return totals().sdc; }
OutcomeCounts TrialStats::totals() const noexcept { return sum_counts(per_iteration); }
Summary TrialStats::sdc_pct() const
{
    return pct_summary(per_iteration, [](const OutcomeCounts& c) { return c.sdc; });
}
Summary TrialStats::cf_pct() const
{
    return pct_summary(per_iteration, [](const OutcomeCounts& c) { return c.cf(); });
}
Summary TrialStats::due_pct() const
{
    return pct_summary(per_iteration, [](const OutcomeCounts& c) { return c.due; });
}
Summary TrialStats::corrected_pct() const
{
    return pct_summary(per_iteration, [](const OutcomeCounts& c) { return c.corrected; });
}

TrialRunner::TrialRunner(const ExperimentConfig& config)
    : config_(config), scheme_(config.scheme, config.hash), mask_(scheme_.geometry())
{
    config_.validate();
}

TrialOutcome TrialRunner::run(std::uint64_t iteration, std::uint64_t trial_index)
{
    CounterRng rng = CounterRng::stream(config_.master_seed ^ kLineDomain, iteration, trial_index);
    CacheLine data;
    for (std::size_t i = 0; i < kLineBytes; i += 8) {
        const std::uint64_t r = rng();
        for (std::size_t j = 0; j < 8; ++j)
            data[i + j] = static_cast<std::uint8_t>(r >> (8 * j));
    }
    Address addr{};
    const std::uint8_t* addr_ptr = nullptr;
    if (config_.address_protect) {
        const std::uint64_t r = rng();
        for (std::size_t j = 0; j < kAddressBytes; ++j)
            addr[j] = static_cast<std::uint8_t>(r >> (8 * j));
        addr_ptr = addr.data();
    }

    scheme_.encode_into(data, addr_ptr, line_);
    gen_mask_into(config_.fault_mode, scheme_.geometry(), rng, &line_.bits, mask_, config_.pin_scope);
    apply_fault_in_place(line_.bits, mask_);
    scheme_.decode_into(line_, addr_ptr, verdict_);

    switch (verdict_.kind) {
    case VerdictKind::DUE: return TrialOutcome::CfDue;
    case VerdictKind::NoError: return verdict_.data == data ? TrialOutcome::CfNoError : TrialOutcome::Sdc;
    case VerdictKind::Corrected: return verdict_.data == data ? TrialOutcome::CfCorrected : TrialOutcome::Sdc;
    }
    return TrialOutcome::Sdc;
}

TrialOutcome run_trial(const ExperimentConfig& config, std::uint64_t iteration, std::uint64_t trial_index)
{
    TrialRunner runner(config);
    return runner.run(iteration, trial_index);
}

TrialStats run_experiment(const ExperimentConfig& config)
{
    config.validate();
    TrialStats stats;
    stats.trials_per_iteration = config.trials_per_iteration;
    stats.per_iteration = run_parallel<OutcomeCounts>(
        config.trials_per_iteration, config.iterations, config.workers, [&config] {
            return [runner = TrialRunner(config)](std::uint64_t it, std::uint64_t t, OutcomeCounts& c) mutable {
                c.add(runner.run(it, t));
            };
        });
    return stats;
}

SymbolErrorCounts& SymbolErrorCounts::operator+=(const SymbolErrorCounts& o) noexcept
{
    corrected += o.corrected;
    miscorrected += o.miscorrected;
    detected += o.detected;
    undetected += o.undetected;
    return *this;
}

SymbolErrorCounts SymbolErrorStats::totals() const noexcept { return sum_counts(per_iteration); }
Summary SymbolErrorStats::miscorrected_pct() const
{
    return pct_summary(per_iteration, [](const SymbolErrorCounts& c) { return c.miscorrected; });
}
Summary SymbolErrorStats::detected_pct() const
{
    return pct_summary(per_iteration, [](const SymbolErrorCounts& c) { return c.detected; });
}
Summary SymbolErrorStats::undetected_pct() const
{
    return pct_summary(per_iteration, [](const SymbolErrorCounts& c) { return c.undetected; });
}
Summary SymbolErrorStats::corrected_pct() const
{
    return pct_summary(per_iteration, [](const SymbolErrorCounts& c) { return c.corrected; });
}

SymbolErrorStats run_random_symbol_experiment(int n, int k, int e, std::uint64_t trials, int iterations,
                                              std::uint64_t seed, int workers)
{
    validate_runs(trials, iterations);
    const ReedSolomonCode code(n, k);
    if (e < 1 || e > n)
        throw std::invalid_argument("error weight must be in 1.." + std::to_string(n) + ", got " +
                                    std::to_string(e));

    SymbolErrorStats stats;
    stats.n = n;
    stats.k = k;
    stats.e = e;
    stats.trials_per_iteration = trials;
    stats.per_iteration = run_parallel<SymbolErrorCounts>(trials, iterations, workers, [&] {
        struct Worker {
            const ReedSolomonCode* code;
            std::uint64_t seed;
            int e;
            std::vector<FieldElement> clean;
            std::vector<FieldElement> word;
            std::vector<int> positions;

            void operator()(std::uint64_t it, std::uint64_t t, SymbolErrorCounts& c)
            {
                const int n = code->n();
                const int k = code->k();
                CounterRng rng = CounterRng::stream(seed ^ kSymbolDomain, it, t);
                for (int i = 0; i < k; ++i)
                    word[static_cast<std::size_t>(i)] = static_cast<FieldElement>(rng.next32());
                code->encode_into(std::span(word).first(static_cast<std::size_t>(k)), clean);
                word = clean;
                // partial Fisher-Yates for e distinct positions
                for (int i = 0; i < n; ++i)
                    positions[static_cast<std::size_t>(i)] = i;
                for (int i = 0; i < e; ++i) {
                    const int j = i + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - i)));
                    std::swap(positions[static_cast<std::size_t>(i)], positions[static_cast<std::size_t>(j)]);
                    word[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] ^=
                        static_cast<FieldElement>(1 + rng.below(255));
                }
                switch (code->decode_in_place(word)) {
                case RsOutcomeKind::Uncorrectable: ++c.detected; break;
                case RsOutcomeKind::NoError: ++c.undetected; break;
                case RsOutcomeKind::Corrected:
                    if (word == clean)
                        ++c.corrected;
                    else
                        ++c.miscorrected;
                    break;
                }
            }
        };
        return Worker{&code,
                      seed,
                      e,
                      std::vector<FieldElement>(static_cast<std::size_t>(n)),
                      std::vector<FieldElement>(static_cast<std::size_t>(n)),
                      std::vector<int>(static_cast<std::size_t>(n))};
    });
    return stats;
}

AddressCounts& AddressCounts::operator+=(const AddressCounts& o) noexcept
{
    detected += o.detected;
    sdc += o.sdc;
    return *this;
}

AddressCounts AddressStats::totals() const noexcept { return sum_counts(per_iteration); }
Summary AddressStats::sdc_count() const
{
    std::vector<double> v;
    for (const auto& c : per_iteration)
        v.push_back(static_cast<double>(c.sdc));
    return summarize(v);
}
Summary AddressStats::sdc_pct() const
{
    return pct_summary(per_iteration, [](const AddressCounts& c) { return c.sdc; });
}

AddressStats run_address_fault_experiment(std::uint64_t trials, int iterations, std::uint64_t seed,
                                          const HashSpec& hash, int workers)
{
    validate_runs(trials, iterations);
    const Crc32 crc(hash);
    AddressStats stats;
    stats.trials_per_iteration = trials;
    stats.per_iteration = run_parallel<AddressCounts>(trials, iterations, workers, [&crc, seed] {
        return [&crc, seed](std::uint64_t it, std::uint64_t t, AddressCounts& c) {
            CounterRng rng = CounterRng::stream(seed ^ kAddressDomain, it, t);
            std::array<std::uint8_t, kLineBytes + kAddressBytes> buf;
            for (std::size_t i = 0; i < buf.size(); i += 8) {
                const std::uint64_t r = rng();
                for (std::size_t j = 0; j < 8; ++j)
                    buf[i + j] = static_cast<std::uint8_t>(r >> (8 * j));
            }
            const std::span<const std::uint8_t> data(buf.data(), kLineBytes);
            const HashValue stored = crc.compute(data, std::span<const std::uint8_t>(buf.data() + kLineBytes, kAddressBytes));
            std::uint64_t mask = 0;
            while (mask == 0)
                mask = rng();
            std::array<std::uint8_t, kAddressBytes> wrong;
            for (std::size_t j = 0; j < kAddressBytes; ++j)
                wrong[j] = static_cast<std::uint8_t>(buf[kLineBytes + j] ^ static_cast<std::uint8_t>(mask >> (8 * j)));
            if (crc.compute(data, wrong) != stored)
                ++c.detected;
            else
                ++c.sdc;
        };
    });
    return stats;
}

} // namespace dramecc
