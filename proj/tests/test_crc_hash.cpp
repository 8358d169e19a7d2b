#include "doctest.h"
#include "oracles.hpp"

#include "dramecc/crc_hash.hpp"

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

using namespace dramecc;

namespace {

std::vector<std::uint8_t> ascii(std::string_view s) { return {s.begin(), s.end()}; }

std::uint32_t oracle_hash(const HashSpec& s, std::span<const std::uint8_t> msg)
{
    return oracle::crc32_bitwise(msg, s.polynomial, s.init, s.reflect_in, s.reflect_out, s.final_xor);
}

// Flip `weight` distinct random bits of a copy of msg.
std::vector<std::uint8_t> flip_bits(std::mt19937_64& rng, std::vector<std::uint8_t> msg, int weight)
{
    const std::size_t nbits = msg.size() * 8;
    std::vector<std::size_t> chosen;
    while (static_cast<int>(chosen.size()) < weight) {
        const std::size_t b = rng() % nbits;
        if (std::find(chosen.begin(), chosen.end(), b) == chosen.end())
            chosen.push_back(b);
    }
    for (std::size_t b : chosen)
        msg[b / 8] ^= static_cast<std::uint8_t>(1u << (b % 8));
    return msg;
}

} // namespace

TEST_CASE("standard check values")
{
    const auto msg = ascii("123456789");
    CHECK(Crc32(hashes::crc32c_castagnoli()).compute(msg) == 0xE3069283u);
    CHECK(Crc32(hashes::crc32_ieee8023()).compute(msg) == 0xCBF43926u);
    CHECK(oracle_hash(hashes::crc32c_castagnoli(), msg) == 0xE3069283u);
    CHECK(oracle_hash(hashes::crc32_ieee8023(), msg) == 0xCBF43926u);
    CHECK(Crc32(hashes::crc32_ieee8023()).compute({}) == 0x00000000u);
}

TEST_CASE("table-driven CRC matches bitwise long division")
{
    std::mt19937_64 rng(11);
    std::vector<HashSpec> specs;
    for (const auto& name : hash_names())
        specs.push_back(hash_spec_by_name(name));
    specs.push_back({"crc32-bzip2", 0x04C11DB7u, 0xFFFFFFFFu, false, false, 0xFFFFFFFFu});
    specs.push_back({"mixed", 0x1EDC6F41u, 0x12345678u, true, false, 0u});
    specs.push_back({"mixed2", 0x741B8CD7u, 0u, false, true, 0xA5A5A5A5u});
    for (const auto& spec : specs) {
        const Crc32 crc(spec);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<std::uint8_t> msg(rng() % 100);
            for (auto& b : msg)
                b = static_cast<std::uint8_t>(rng());
            CHECK_MESSAGE(crc.compute(msg) == oracle_hash(spec, msg), spec.name);
        }
    }
    // BZIP2 published check value
    CHECK(Crc32(specs[4]).compute(ascii("123456789")) == 0xFC891918u);
}

TEST_CASE("two-part compute equals hashing the concatenation")
{
    const Crc32 crc(hashes::crc32c_castagnoli());
    std::mt19937_64 rng(12);
    std::vector<std::uint8_t> data(64), addr(8);
    for (auto& b : data)
        b = static_cast<std::uint8_t>(rng());
    for (auto& b : addr)
        b = static_cast<std::uint8_t>(rng());
    std::vector<std::uint8_t> both = data;
    both.insert(both.end(), addr.begin(), addr.end());
    CHECK(crc.compute(data, addr) == crc.compute(both));
}

TEST_CASE("name lookup")
{
    for (const auto& name : hash_names())
        CHECK(hash_spec_by_name(name).name == name);
    CHECK(hash_spec_by_name(kDefaultHashName).polynomial == 0x1EDC6F41u);
    CHECK_THROWS_AS(hash_spec_by_name("md5"), std::invalid_argument);
}

TEST_CASE("split and join")
{
    CHECK(hash_split(0u) == std::array<FieldElement, 4>{0, 0, 0, 0});
    CHECK(hash_split(0x04030201u) == std::array<FieldElement, 4>{1, 2, 3, 4});
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const auto h = static_cast<HashValue>(rng());
        const auto s = hash_split(h);
        CHECK(hash_join(s) == h);
    }
}

TEST_CASE("CRC linearity over equal-length messages")
{
    const Crc32 crc(hashes::crc32c_castagnoli());
    std::mt19937_64 rng(14);
    const std::vector<std::uint8_t> zero(72, 0);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint8_t> a(72), b(72), x(72);
        for (std::size_t j = 0; j < 72; ++j) {
            a[j] = static_cast<std::uint8_t>(rng());
            b[j] = static_cast<std::uint8_t>(rng());
            x[j] = a[j] ^ b[j];
        }
        CHECK((crc.compute(a) ^ crc.compute(b) ^ crc.compute(zero)) == crc.compute(x));
    }
}

TEST_CASE("HD=6 polynomials detect every 1- and 2-bit error on 72-byte messages")
{
    std::mt19937_64 rng(15);
    std::vector<std::uint8_t> msg(72);
    for (auto& b : msg)
        b = static_cast<std::uint8_t>(rng());
    for (const auto& spec : {hashes::crc32c_castagnoli(), hashes::koopman32k(), hashes::koopman32k2()}) {
        const Crc32 crc(spec);
        const HashValue ref = crc.compute(msg);
        long collisions = 0;
        for (std::size_t i = 0; i < 576; ++i) {
            auto m1 = msg;
            m1[i / 8] ^= static_cast<std::uint8_t>(1u << (i % 8));
            collisions += crc.compute(m1) == ref;
            for (std::size_t j = i + 1; j < 576; ++j) {
                auto m2 = m1;
                m2[j / 8] ^= static_cast<std::uint8_t>(1u << (j % 8));
                collisions += crc.compute(m2) == ref;
            }
        }
        CHECK_MESSAGE(collisions == 0, spec.name);
    }
}

TEST_CASE("sampled 3-5 bit errors and odd-weight errors are detected")
{
    std::mt19937_64 rng(16);
    std::vector<std::uint8_t> msg(72);
    for (auto& b : msg)
        b = static_cast<std::uint8_t>(rng());
    for (const auto& spec : {hashes::crc32c_castagnoli(), hashes::koopman32k(), hashes::koopman32k2()}) {
        const Crc32 crc(spec);
        const HashValue ref = crc.compute(msg);
        long collisions = 0;
        for (int trial = 0; trial < 100000; ++trial)
            collisions += crc.compute(flip_bits(rng, msg, 3 + trial % 3)) == ref;
        CHECK_MESSAGE(collisions == 0, spec.name);

        long odd_collisions = 0;
        for (int trial = 0; trial < 20000; ++trial)
            odd_collisions += crc.compute(flip_bits(rng, msg, 7 + 2 * (trial % 20))) == ref;
        CHECK_MESSAGE(odd_collisions == 0, spec.name);
    }
}

TEST_CASE("digest depends on byte order")
{
    const Crc32 crc(hashes::crc32c_castagnoli());
    auto msg = ascii("abcdefgh");
    const auto h = crc.compute(msg);
    std::swap(msg[0], msg[7]);
    CHECK(crc.compute(msg) != h);
    const auto sym = ascii("abba");
    auto rev = sym;
    std::reverse(rev.begin(), rev.end());
    CHECK(crc.compute(rev) == crc.compute(sym));
}
