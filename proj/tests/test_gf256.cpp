#include "doctest.h"
#include "oracles.hpp"

#include "dramecc/gf256.hpp"

#include <set>

using dramecc::FieldElement;
using dramecc::GaloisField;

TEST_CASE("addition is xor")
{
    CHECK(GaloisField::add(0x00, 0x5A) == 0x5A);
    CHECK(GaloisField::add(0x5A, 0x5A) == 0x00);
    CHECK(GaloisField::add(0xFF, 0x0F) == 0xF0);
}

TEST_CASE("multiplication examples")
{
    const GaloisField gf;
    CHECK(gf.mul(0x00, 0x37) == 0x00);
    CHECK(gf.mul(0x01, 0x37) == 0x37);
    // carryless 0x02*0x80 = 0x100, reduced by 0x11D
    CHECK(oracle::gf_mul_bitwise(0x02, 0x80) == 0x1D);
    CHECK(gf.mul(0x02, 0x80) == 0x1D);
}

TEST_CASE("table multiply matches bitwise oracle on all 65536 pairs")
{
    const GaloisField gf;
    long mismatches = 0;
    for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b)
            if (gf.mul(static_cast<FieldElement>(a), static_cast<FieldElement>(b)) !=
                oracle::gf_mul_bitwise(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)))
                ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("commutativity and distributivity, exhaustive")
{
    const GaloisField gf;
    bool commutative = true;
    bool distributive = true;
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned b = 0; b < 256; ++b) {
            const auto fa = static_cast<FieldElement>(a);
            const auto fb = static_cast<FieldElement>(b);
            commutative &= gf.mul(fa, fb) == gf.mul(fb, fa);
            // one fixed c per (a,b) keeps this at 65536 checks
            const auto fc = static_cast<FieldElement>((a * 31 + b * 7 + 3) & 0xFF);
            distributive &= gf.mul(fa, GaloisField::add(fb, fc)) ==
                            GaloisField::add(gf.mul(fa, fb), gf.mul(fa, fc));
        }
    }
    CHECK(commutative);
    CHECK(distributive);
}

TEST_CASE("inverse")
{
    const GaloisField gf;
    CHECK(gf.inv(0x01) == 0x01);
    for (unsigned a = 1; a < 256; ++a) {
        // exhaustive search for the inverse
        unsigned found = 0;
        for (unsigned b = 1; b < 256; ++b)
            if (oracle::gf_mul_bitwise(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == 1)
                found = b;
        CHECK(gf.inv(static_cast<FieldElement>(a)) == found);
    }
    CHECK_THROWS_AS(gf.inv(0x00), dramecc::FieldDomainError);
    CHECK_THROWS_AS(gf.div(0x05, 0x00), dramecc::FieldDomainError);
}

TEST_CASE("powers of alpha")
{
    const GaloisField gf;
    CHECK(gf.pow(0x02, 0) == 0x01);
    std::uint8_t acc = 1;
    for (int i = 0; i < 8; ++i)
        acc = oracle::gf_mul_bitwise(acc, 0x02);
    CHECK(acc == 0x1D);
    CHECK(gf.pow(0x02, 8) == 0x1D);
    CHECK(gf.pow(0x02, 255) == 0x01);
    CHECK(gf.pow(0x00, 3) == 0x00);
    CHECK_THROWS_AS(gf.pow(0x00, 0), dramecc::FieldDomainError);

    std::set<FieldElement> seen;
    for (int i = 0; i < 255; ++i)
        seen.insert(gf.alpha_pow(i));
    CHECK(seen.size() == 255);
    CHECK(seen.count(0) == 0);
}

TEST_CASE("log/antilog tables are inverse permutations")
{
    const GaloisField gf;
    for (unsigned x = 1; x < 256; ++x)
        CHECK(gf.alpha_pow(gf.log(static_cast<FieldElement>(x))) == x);
    CHECK_THROWS_AS(gf.log(0), dramecc::FieldDomainError);
}

TEST_CASE("alternate primitive polynomial and rejection of non-primitive ones")
{
    const GaloisField alt(0x12D);
    for (unsigned a = 0; a < 256; a += 7)
        for (unsigned b = 0; b < 256; b += 5)
            CHECK(alt.mul(static_cast<FieldElement>(a), static_cast<FieldElement>(b)) ==
                  oracle::gf_mul_bitwise(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), 0x12D));
    // x^8+x^4+x^3+x+1 (AES) is irreducible but 0x02 is not a generator
    CHECK_THROWS_AS(GaloisField(0x11B), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(0x0FF), std::invalid_argument);
}
