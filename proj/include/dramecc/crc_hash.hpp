#pragma once

#include "dramecc/gf256.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dramecc {

/// CRC-32 parameter set in the usual catalogue form. `polynomial` is the
/// normal (MSB-first) representation with the implicit x^32 term omitted.
struct HashSpec {
    std::string name;
    std::uint32_t polynomial = 0;
    std::uint32_t init = 0;
    bool reflect_in = false;
    bool reflect_out = false;
    std::uint32_t final_xor = 0;
};

namespace hashes {
HashSpec crc32c_castagnoli();
HashSpec crc32_ieee8023();
HashSpec koopman32k();
HashSpec koopman32k2();
} // namespace hashes

/// Names accepted by hash_spec_by_name(), in a stable order.
std::vector<std::string> hash_names();

/// Throws std::invalid_argument for unknown names.
HashSpec hash_spec_by_name(std::string_view name);

inline constexpr std::string_view kDefaultHashName = "crc32c-castagnoli";

using HashValue = std::uint32_t;

/// Table-driven CRC-32. Immutable once built.
class Crc32 {
public:
    explicit Crc32(HashSpec spec);

    const HashSpec& spec() const noexcept { return spec_; }

    HashValue compute(std::span<const std::uint8_t> message) const noexcept;

    /// Equivalent to compute(a || b) without building the concatenation.
    HashValue compute(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const noexcept;

private:
    std::uint32_t update(std::uint32_t reg, std::span<const std::uint8_t> bytes) const noexcept;
    HashValue finish(std::uint32_t reg) const noexcept;

    HashSpec spec_;
    /// slice_[0] is the byte-wise table; slices 1..7 serve the 8-byte loop
    /// of the reflected variant.
    std::array<std::array<std::uint32_t, 256>, 8> slice_{};
};

/// Byte i of the 32-bit hash becomes symbol i (little-endian).
std::array<FieldElement, 4> hash_split(HashValue h) noexcept;
HashValue hash_join(std::span<const FieldElement, 4> symbols) noexcept;

} // namespace dramecc
