#include "dramecc/crc_hash.hpp"

#include <stdexcept>

namespace dramecc {

namespace hashes {

// All four share the reflected, all-ones init/xor parameter set of CRC-32C.
HashSpec crc32c_castagnoli() { return {"crc32c-castagnoli", 0x1EDC6F41u, 0xFFFFFFFFu, true, true, 0xFFFFFFFFu}; }
HashSpec crc32_ieee8023() { return {"crc32-ieee8023", 0x04C11DB7u, 0xFFFFFFFFu, true, true, 0xFFFFFFFFu}; }
// Koopman notation 0xBA0DC66B, factorisation {1,3,28}.
HashSpec koopman32k() { return {"koopman32k", 0x741B8CD7u, 0xFFFFFFFFu, true, true, 0xFFFFFFFFu}; }
// Koopman notation 0x992C1A4C, factorisation {1,1,30}.
HashSpec koopman32k2() { return {"koopman32k2", 0x32583499u, 0xFFFFFFFFu, true, true, 0xFFFFFFFFu}; }

} // namespace hashes

std::vector<std::string> hash_names()
{
    return {"crc32c-castagnoli", "crc32-ieee8023", "koopman32k", "koopman32k2"};
}

HashSpec hash_spec_by_name(std::string_view name)
{
    if (name == "crc32c-castagnoli")
        return hashes::crc32c_castagnoli();
    if (name == "crc32-ieee8023")
        return hashes::crc32_ieee8023();
    if (name == "koopman32k")
        return hashes::koopman32k();
    if (name == "koopman32k2")
        return hashes::koopman32k2();
    throw std::invalid_argument("unknown hash '" + std::string(name) + "'");
}

namespace {

std::uint32_t reverse_bits(std::uint32_t v) noexcept
{
    v = ((v >> 1) & 0x55555555u) | ((v & 0x55555555u) << 1);
    v = ((v >> 2) & 0x33333333u) | ((v & 0x33333333u) << 2);
    v = ((v >> 4) & 0x0F0F0F0Fu) | ((v & 0x0F0F0F0Fu) << 4);
    v = ((v >> 8) & 0x00FF00FFu) | ((v & 0x00FF00FFu) << 8);
    return (v >> 16) | (v << 16);
}

std::uint32_t load_le32(const std::uint8_t* p) noexcept
{
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

} // namespace

Crc32::Crc32(HashSpec spec) : spec_(std::move(spec))
{
    if (spec_.reflect_in) {
        const std::uint32_t rpoly = reverse_bits(spec_.polynomial);
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int b = 0; b < 8; ++b)
                c = (c & 1u) ? (c >> 1) ^ rpoly : c >> 1;
            slice_[0][i] = c;
        }
        for (std::size_t k = 1; k < slice_.size(); ++k)
            for (std::size_t i = 0; i < 256; ++i) {
                const std::uint32_t prev = slice_[k - 1][i];
                slice_[k][i] = (prev >> 8) ^ slice_[0][prev & 0xFFu];
            }
    } else {
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i << 24;
            for (int b = 0; b < 8; ++b)
                c = (c & 0x80000000u) ? (c << 1) ^ spec_.polynomial : c << 1;
            slice_[0][i] = c;
        }
    }
}

std::uint32_t Crc32::update(std::uint32_t reg, std::span<const std::uint8_t> bytes) const noexcept
{
    // Reflected mode keeps the register bit-reversed throughout.
    const auto& t0 = slice_[0];
    if (spec_.reflect_in) {
        const std::uint8_t* p = bytes.data();
        std::size_t len = bytes.size();
        for (; len >= 8; len -= 8, p += 8) {
            const std::uint32_t one = reg ^ load_le32(p);
            const std::uint32_t two = load_le32(p + 4);
            reg = slice_[7][one & 0xFFu] ^ slice_[6][(one >> 8) & 0xFFu] ^ slice_[5][(one >> 16) & 0xFFu] ^
                  slice_[4][one >> 24] ^ slice_[3][two & 0xFFu] ^ slice_[2][(two >> 8) & 0xFFu] ^
                  slice_[1][(two >> 16) & 0xFFu] ^ t0[two >> 24];
        }
        for (; len > 0; --len, ++p)
            reg = (reg >> 8) ^ t0[(reg ^ *p) & 0xFFu];
    } else {
        for (const std::uint8_t b : bytes)
            reg = (reg << 8) ^ t0[((reg >> 24) ^ b) & 0xFFu];
    }
    return reg;
}

HashValue Crc32::finish(std::uint32_t reg) const noexcept
{
    if (spec_.reflect_in != spec_.reflect_out)
        reg = reverse_bits(reg);
    return reg ^ spec_.final_xor;
}

HashValue Crc32::compute(std::span<const std::uint8_t> message) const noexcept
{
    const std::uint32_t init = spec_.reflect_in ? reverse_bits(spec_.init) : spec_.init;
    return finish(update(init, message));
}

HashValue Crc32::compute(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const noexcept
{
    const std::uint32_t init = spec_.reflect_in ? reverse_bits(spec_.init) : spec_.init;
    return finish(update(update(init, a), b));
}

std::array<FieldElement, 4> hash_split(HashValue h) noexcept
{
    return {static_cast<FieldElement>(h), static_cast<FieldElement>(h >> 8),
            static_cast<FieldElement>(h >> 16), static_cast<FieldElement>(h >> 24)};
}

HashValue hash_join(std::span<const FieldElement, 4> s) noexcept
{
    return static_cast<HashValue>(s[0]) | (static_cast<HashValue>(s[1]) << 8) |
           (static_cast<HashValue>(s[2]) << 16) | (static_cast<HashValue>(s[3]) << 24);
}

} // namespace dramecc
