#include "doctest.h"

#include "dramecc/rs_codec.hpp"

#include <algorithm>
#include <random>
#include <vector>

using dramecc::FieldElement;
using dramecc::ReedSolomonCode;
using dramecc::RsOutcomeKind;

namespace {

std::vector<FieldElement> random_symbols(std::mt19937_64& rng, int count)
{
    std::vector<FieldElement> v(static_cast<std::size_t>(count));
    for (auto& s : v)
        s = static_cast<FieldElement>(rng() & 0xFF);
    return v;
}

FieldElement random_nonzero(std::mt19937_64& rng)
{
    return static_cast<FieldElement>(1 + rng() % 255);
}

bool all_zero(const std::vector<FieldElement>& v)
{
    return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x == 0; });
}

// Flip `weight` distinct random positions with random nonzero values.
void corrupt(std::mt19937_64& rng, std::vector<FieldElement>& word, int weight)
{
    std::vector<int> idx(word.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = static_cast<int>(i);
    for (int i = 0; i < weight; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng() % (idx.size() - static_cast<std::size_t>(i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
        word[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] ^= random_nonzero(rng);
    }
}

} // namespace

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(ReedSolomonCode(16, 16), std::invalid_argument);
    CHECK_THROWS_AS(ReedSolomonCode(256, 200), std::invalid_argument);
    CHECK_THROWS_AS(ReedSolomonCode(10, 0), std::invalid_argument);
    const ReedSolomonCode code(18, 16);
    CHECK(code.t() == 1);
    CHECK(ReedSolomonCode(19, 16).t() == 1);
    CHECK(ReedSolomonCode(72, 64).t() == 4);
    CHECK(ReedSolomonCode(76, 64).t() == 6);
    CHECK_THROWS_AS(code.encode(std::vector<FieldElement>(15)), std::invalid_argument);
    CHECK_THROWS_AS(code.syndromes(std::vector<FieldElement>(17)), std::invalid_argument);
    CHECK_THROWS_AS(code.decode(std::vector<FieldElement>(19)), std::invalid_argument);
    CHECK_THROWS_AS(code.decode_euclidean(std::vector<FieldElement>(5)), std::invalid_argument);
}

TEST_CASE("generator has roots a^1..a^(n-k)")
{
    for (auto [n, k] : {std::pair{18, 16}, {19, 16}, {19, 17}, {72, 64}, {76, 64}}) {
        const ReedSolomonCode code(n, k);
        const auto& gf = code.field();
        const auto& g = code.generator();
        REQUIRE(g.size() == static_cast<std::size_t>(n - k + 1));
        CHECK(g.front() == 1);
        for (int i = 0; i <= n - k + 1; ++i) {
            FieldElement v = 0;
            for (FieldElement c : g)
                v = static_cast<FieldElement>(gf.mul(v, gf.alpha_pow(i)) ^ c);
            if (i >= 1 && i <= n - k)
                CHECK(v == 0);
            else
                CHECK(v != 0); // a^0 and a^(n-k+1) are not roots
        }
    }
}

TEST_CASE("encode: zero, systematic, valid, linear")
{
    const ReedSolomonCode code(18, 16);
    CHECK(all_zero(code.encode(std::vector<FieldElement>(16, 0))));

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_symbols(rng, 16);
        const auto b = random_symbols(rng, 16);
        const auto ca = code.encode(a);
        const auto cb = code.encode(b);
        CHECK(std::equal(a.begin(), a.end(), ca.begin()));
        CHECK(all_zero(code.syndromes(ca)));
        std::vector<FieldElement> sum(18);
        for (int i = 0; i < 18; ++i)
            sum[static_cast<std::size_t>(i)] = ca[static_cast<std::size_t>(i)] ^ cb[static_cast<std::size_t>(i)];
        CHECK(all_zero(code.syndromes(sum)));
    }
}

TEST_CASE("syndromes test membership, not identity")
{
    const ReedSolomonCode code(18, 16);
    std::mt19937_64 rng(2);
    const auto c = code.encode(random_symbols(rng, 16));
    auto other = code.encode(random_symbols(rng, 16));
    CHECK(all_zero(code.syndromes(other)));
    for (int pos = 0; pos < 18; ++pos) {
        auto w = c;
        w[static_cast<std::size_t>(pos)] ^= 0x41;
        CHECK_FALSE(all_zero(code.syndromes(w)));
    }
}

TEST_CASE("exhaustive single-symbol correction on RS(18,16), BM and Euclid agree")
{
    const ReedSolomonCode code(18, 16);
    std::mt19937_64 rng(3);
    long bad = 0;
    long disagreements = 0;
    for (int dw = 0; dw < 20; ++dw) {
        const auto c = code.encode(random_symbols(rng, 16));
        for (int pos = 0; pos < 18; ++pos) {
            for (unsigned v = 1; v < 256; ++v) {
                auto w = c;
                w[static_cast<std::size_t>(pos)] ^= static_cast<FieldElement>(v);
                const auto bm = code.decode(w);
                const auto eu = code.decode_euclidean(w);
                if (bm.kind != RsOutcomeKind::Corrected || bm.corrected != c || bm.error_count != 1 ||
                    bm.error_positions != std::vector<int>{pos})
                    ++bad;
                if (eu.kind != bm.kind || eu.corrected != bm.corrected ||
                    eu.error_positions != bm.error_positions)
                    ++disagreements;
            }
        }
    }
    CHECK(bad == 0);
    CHECK(disagreements == 0);
}

TEST_CASE("valid codeword decodes as NoError for both decoders")
{
    const ReedSolomonCode code(19, 17);
    std::mt19937_64 rng(4);
    const auto c = code.encode(random_symbols(rng, 17));
    const auto bm = code.decode(c);
    CHECK(bm.kind == RsOutcomeKind::NoError);
    CHECK(bm.corrected == c);
    CHECK(code.decode_euclidean(c).kind == RsOutcomeKind::NoError);
}

TEST_CASE("errors within the correction radius are always repaired")
{
    std::mt19937_64 rng(5);
    for (auto [n, k] : {std::pair{19, 16}, {72, 64}, {76, 64}, {40, 20}}) {
        const ReedSolomonCode code(n, k);
        for (int trial = 0; trial < 3000; ++trial) {
            const auto c = code.encode(random_symbols(rng, k));
            const int weight = 1 + static_cast<int>(rng() % static_cast<unsigned>(code.t()));
            auto w = c;
            corrupt(rng, w, weight);
            const auto out = code.decode(w);
            REQUIRE(out.kind == RsOutcomeKind::Corrected);
            CHECK(out.corrected == c);
            CHECK(out.error_count == weight);
            std::vector<FieldElement> fixed = w;
            CHECK(code.decode_in_place(fixed) == RsOutcomeKind::Corrected);
            CHECK(fixed == c);
        }
    }
}

TEST_CASE("two-symbol errors on a distance-3 code are never undetected")
{
    const ReedSolomonCode code(18, 16);
    std::mt19937_64 rng(6);
    const int trials = 200000;
    int miscorrected = 0;
    int noerror = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto c = code.encode(random_symbols(rng, 16));
        auto w = c;
        corrupt(rng, w, 2);
        const auto out = code.decode(w);
        if (out.kind == RsOutcomeKind::NoError)
            ++noerror;
        if (out.kind == RsOutcomeKind::Corrected) {
            CHECK(out.corrected != c);
            ++miscorrected;
        }
    }
    CHECK(noerror == 0);
    // exact rate is 16/255 for an MDS code with two checks; allow 5 sigma
    const double p = 16.0 / 255.0;
    const double sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(static_cast<double>(miscorrected) / trials - p) < 5 * sigma);
}

TEST_CASE("two-symbol errors on a distance-4 code are always detected")
{
    const ReedSolomonCode code(19, 16);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50000; ++trial) {
        auto w = code.encode(random_symbols(rng, 16));
        corrupt(rng, w, 2);
        CHECK(code.decode(w).kind == RsOutcomeKind::Uncorrectable);
    }
}

TEST_CASE("corrected outcomes are codewords; uncorrectable leaves the word untouched")
{
    std::mt19937_64 rng(8);
    for (auto [n, k] : {std::pair{18, 16}, {19, 17}, {19, 16}, {72, 64}, {76, 64}}) {
        const ReedSolomonCode code(n, k);
        for (int trial = 0; trial < 20000; ++trial) {
            auto w = random_symbols(rng, n);
            const auto out = code.decode(w);
            if (out.kind != RsOutcomeKind::Uncorrectable)
                CHECK(code.is_codeword(out.corrected));
            else
                CHECK(out.corrected.empty());
            auto copy = w;
            const auto kind = code.decode_in_place(copy);
            CHECK(kind == out.kind);
            if (kind == RsOutcomeKind::Uncorrectable)
                CHECK(copy == w);
        }
    }
}

TEST_CASE("BM and Euclidean decoders agree on heavy random corruption")
{
    std::mt19937_64 rng(9);
    for (auto [n, k] : {std::pair{18, 16}, {19, 16}, {19, 17}, {72, 64}, {76, 64}, {30, 20}}) {
        const ReedSolomonCode code(n, k);
        long disagreements = 0;
        for (int trial = 0; trial < 20000; ++trial) {
            auto w = code.encode(random_symbols(rng, k));
            corrupt(rng, w, 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, code.t() + 3))));
            const auto bm = code.decode(w);
            const auto eu = code.decode_euclidean(w);
            if (bm.kind != eu.kind || bm.corrected != eu.corrected)
                ++disagreements;
        }
        CHECK_MESSAGE(disagreements == 0, "RS(" << n << "," << k << ")");
    }
}
