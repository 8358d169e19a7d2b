#include "doctest.h"

#include "dramecc/sim_harness.hpp"

#include <cmath>
#include <stdexcept>

using namespace dramecc;

namespace {

ExperimentConfig small_config(SchemeId scheme, FaultMode mode, std::uint64_t trials = 2000, int iterations = 3)
{
    ExperimentConfig c;
    c.scheme = scheme;
    c.fault_mode = mode;
    c.trials_per_iteration = trials;
    c.iterations = iterations;
    c.master_seed = 99;
    c.workers = 1;
    return c;
}

} // namespace

TEST_CASE("summary statistics")
{
    const Summary empty = summarize({});
    CHECK(empty.mean == 0);
    CHECK(empty.stddev == 0);
    const Summary one = summarize({4.0});
    CHECK(one.mean == 4.0);
    CHECK(one.stddev == 0);
    const Summary s = summarize({2, 4, 4, 4, 5, 5, 7, 9});
    CHECK(s.mean == doctest::Approx(5.0));
    CHECK(s.stddev == doctest::Approx(std::sqrt(32.0 / 7.0)));
}

TEST_CASE("worker resolution")
{
    CHECK(resolve_workers(3) == 3);
    CHECK(resolve_workers(0) >= 1);
    CHECK(resolve_workers(-2) >= 1);
}

TEST_CASE("configuration is validated")
{
    auto c = small_config(SchemeId::Baseline, FaultMode::OneBit);
    c.trials_per_iteration = 0;
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    c = small_config(SchemeId::Baseline, FaultMode::OneBit);
    c.iterations = 0;
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    c = small_config(SchemeId::Baseline, FaultMode::OneBit);
    c.address_protect = true;
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    CHECK_THROWS_AS(run_random_symbol_experiment(18, 16, 0, 10, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_random_symbol_experiment(18, 16, 19, 10, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_random_symbol_experiment(18, 18, 1, 10, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_address_fault_experiment(0, 1, 1, hashes::crc32c_castagnoli()), std::invalid_argument);
}

TEST_CASE("counts are conserved for every scheme and fault mode")
{
    for (SchemeId s : kAllSchemes)
        for (FaultMode m : kAllFaultModes) {
            const TrialStats st = run_experiment(small_config(s, m, 300, 2));
            REQUIRE(st.per_iteration.size() == 2);
            for (const auto& it : st.per_iteration)
                CHECK(it.total() == 300);
            const Summary cf = st.cf_pct();
            const Summary sdc = st.sdc_pct();
            CHECK(cf.mean + sdc.mean == doctest::Approx(100.0));
        }
}

TEST_CASE("single-lane faults are always recovered")
{
    for (SchemeId s : kAllSchemes)
        for (FaultMode m : kAllFaultModes) {
            if (!single_lane_mode(m))
                continue;
            CAPTURE(scheme_name(s));
            CAPTURE(fault_mode_name(m));
            const TrialStats st = run_experiment(small_config(s, m));
            const OutcomeCounts t = st.totals();
            CHECK(t.sdc == 0);
            CHECK(t.due == 0);
            CHECK(t.no_error == 0);
            CHECK(t.corrected == t.total());
            CHECK(st.corrected_pct().mean == doctest::Approx(100.0));
        }
}

TEST_CASE("sscmsd never emits silent corruption at small scale")
{
    for (FaultMode m : kAllFaultModes) {
        CAPTURE(fault_mode_name(m));
        CHECK(run_experiment(small_config(SchemeId::SSCMSD, m)).sdc_events() == 0);
        auto c = small_config(SchemeId::SSCMSD, m, 500, 2);
        c.address_protect = true;
        CHECK(run_experiment(c).sdc_events() == 0);
    }
}

TEST_CASE("results do not depend on the worker count")
{
    for (FaultMode m : {FaultMode::OneBitPlusPin, FaultMode::ChipPlusChip, FaultMode::ThreeFault}) {
        auto c = small_config(SchemeId::Baseline, m, 1001, 3);
        c.workers = 1;
        const TrialStats a = run_experiment(c);
        c.workers = 3;
        const TrialStats b = run_experiment(c);
        c.workers = 7;
        const TrialStats d = run_experiment(c);
        CHECK(a.per_iteration == b.per_iteration);
        CHECK(a.per_iteration == d.per_iteration);
    }
    const auto s1 = run_random_symbol_experiment(18, 16, 3, 777, 2, 5, 1);
    const auto s4 = run_random_symbol_experiment(18, 16, 3, 777, 2, 5, 4);
    CHECK(s1.per_iteration == s4.per_iteration);
    const auto a1 = run_address_fault_experiment(555, 2, 5, hashes::crc32c_castagnoli(), 1);
    const auto a2 = run_address_fault_experiment(555, 2, 5, hashes::crc32c_castagnoli(), 2);
    CHECK(a1.per_iteration == a2.per_iteration);
}

TEST_CASE("single trials match the bulk run and depend on the seed")
{
    const auto c = small_config(SchemeId::Baseline, FaultMode::OneBitPlusPin, 400, 1);
    OutcomeCounts by_hand;
    for (std::uint64_t t = 0; t < 400; ++t)
        by_hand.add(run_trial(c, 0, t));
    CHECK(by_hand == run_experiment(c).per_iteration.at(0));

    auto other = c;
    other.master_seed = 100;
    CHECK_FALSE(run_experiment(other).per_iteration == run_experiment(c).per_iteration);
}

TEST_CASE("iterations draw different trials")
{
    const TrialStats st = run_experiment(small_config(SchemeId::Baseline, FaultMode::OneBitPlusChip, 2000, 4));
    CHECK(st.sdc_pct().stddev > 0);
}

TEST_CASE("outcome names")
{
    CHECK(std::string(to_string(TrialOutcome::CfNoError)) == "cf-no-error");
    CHECK(std::string(to_string(TrialOutcome::CfCorrected)) == "cf-corrected");
    CHECK(std::string(to_string(TrialOutcome::CfDue)) == "cf-due");
    CHECK(std::string(to_string(TrialOutcome::Sdc)) == "sdc");
}

TEST_CASE("random symbol errors within the correction radius are always corrected")
{
    const auto s = run_random_symbol_experiment(18, 16, 1, 5000, 2, 3);
    CHECK(s.totals().corrected == 10000);
    const auto s2 = run_random_symbol_experiment(19, 16, 1, 3000, 1, 3);
    CHECK(s2.totals().corrected == 3000);
    CHECK(s2.corrected_pct().mean == doctest::Approx(100.0));
}

TEST_CASE("random double symbol errors on RS(18,16)")
{
    const std::uint64_t trials = 100000;
    const auto s = run_random_symbol_experiment(18, 16, 2, trials, 2, 11);
    const SymbolErrorCounts t = s.totals();
    CHECK(t.total() == 2 * trials);
    CHECK(t.undetected == 0);
    CHECK(t.corrected == 0);
    // exact rate for d = 3 MDS codes: 3 A3 / (C(18,2) 255^2) = 16/255
    const double p = 16.0 / 255.0;
    const double n = static_cast<double>(t.total());
    const double sigma = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(static_cast<double>(t.miscorrected) / n - p) < 4 * sigma);
    CHECK(s.miscorrected_pct().mean + s.detected_pct().mean == doctest::Approx(100.0));
}

TEST_CASE("random symbol errors on the extended code are never miscorrected at weight 2")
{
    // d = 4: a weight-2 error is outside every other radius-1 sphere
    const auto t = run_random_symbol_experiment(19, 16, 2, 20000, 1, 4).totals();
    CHECK(t.detected == 20000);
}

TEST_CASE("address corruption is caught by the hash")
{
    for (const auto& name : hash_names()) {
        CAPTURE(name);
        const auto st = run_address_fault_experiment(20000, 2, 8, hash_spec_by_name(name));
        const AddressCounts t = st.totals();
        CHECK(t.total() == 40000);
        CHECK(t.sdc == 0);
        CHECK(st.sdc_count().mean == 0);
        CHECK(st.sdc_pct().mean == 0);
    }
}
