#pragma once

#include "dramecc/crc_hash.hpp"
#include "dramecc/geometry.hpp"
#include "dramecc/rs_codec.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dramecc {

enum class SchemeId {
    Baseline,    ///< RS(18,16) x4 interleaved, 18 chips
    ExtBaseline, ///< RS(19,16) x4 interleaved, 19 chips
    BambooQPC,   ///< RS(72,64) x1 vertical, 18 chips
    BambooExt,   ///< RS(76,64) x1 vertical, 19 chips
    SSCMSD,      ///< RS(19,17) x4 interleaved + 32-bit hash, 19 chips
};

inline constexpr std::array<SchemeId, 5> kAllSchemes = {SchemeId::Baseline, SchemeId::ExtBaseline,
                                                        SchemeId::BambooQPC, SchemeId::BambooExt,
                                                        SchemeId::SSCMSD};

/// CLI name: baseline, ext-baseline, bamboo-qpc, bamboo-ext, sscmsd.
std::string_view scheme_name(SchemeId id) noexcept;
/// Throws std::invalid_argument for unknown names.
SchemeId scheme_by_name(std::string_view name);

inline constexpr std::size_t kLineBytes = 64;
inline constexpr std::size_t kAddressBytes = 8;

using CacheLine = std::array<std::uint8_t, kLineBytes>;
using Address = std::array<std::uint8_t, kAddressBytes>;

struct WriteInput {
    std::span<const std::uint8_t> data;
    /// Present only in address-protection mode; must then be 8 bytes.
    std::optional<std::span<const std::uint8_t>> address;
};

struct StoredLine {
    SchemeId scheme = SchemeId::Baseline;
    LineBits bits;
};

enum class VerdictKind { NoError, Corrected, DUE };

const char* to_string(VerdictKind kind) noexcept;

struct LineVerdict {
    VerdictKind kind = VerdictKind::NoError;
    /// Meaningful only when kind != DUE.
    CacheLine data{};
    /// Decoder outcome per codeword, in codeword order. For SSCMSD a
    /// codeword whose syndromes were zero reports NoError without running
    /// the corrector.
    std::array<RsOutcomeKind, 4> per_codeword{};
    int codewords = 0;
    bool hash_checked = false;
    /// 1..4 for SSCMSD (hash-match x syndromes-zero table), 0 otherwise.
    int scenario = 0;
};

/// Read-path decision table for SSCMSD:
/// (match, zero) -> 1, (match, nonzero) -> 2, (mismatch, zero) -> 3,
/// (mismatch, nonzero) -> 4.
constexpr int classify_scenario(bool hash_match, bool syndromes_all_zero) noexcept
{
    if (hash_match)
        return syndromes_all_zero ? 1 : 2;
    return syndromes_all_zero ? 3 : 4;
}

/// One cache-line protection scheme. Immutable; encode/decode are safe to
/// call concurrently.
class Scheme {
public:
    explicit Scheme(SchemeId id, const HashSpec& hash = hash_spec_by_name(kDefaultHashName));

    SchemeId id() const noexcept { return id_; }
    const RankGeometry& geometry() const noexcept { return geom_; }
    const SymbolMap& symbol_map() const noexcept { return map_; }
    const ReedSolomonCode& code() const noexcept { return code_; }
    const Crc32& hash() const noexcept { return crc_; }
    bool uses_hash() const noexcept { return id_ == SchemeId::SSCMSD; }

    StoredLine encode(const WriteInput& input) const;
    /// Allocation-free variant for the simulation loop.
    void encode_into(std::span<const std::uint8_t, kLineBytes> data, const std::uint8_t* address,
                     StoredLine& out) const;

    /// `address` is the address the controller believes it is reading;
    /// it only matters for SSCMSD lines written with address protection.
    LineVerdict decode(const StoredLine& line,
                       std::optional<std::span<const std::uint8_t>> address = std::nullopt) const;
    void decode_into(const StoredLine& line, const std::uint8_t* address, LineVerdict& out) const;

private:
    HashValue line_hash(const std::uint8_t* data, const std::uint8_t* address) const noexcept;

    SchemeId id_;
    RankGeometry geom_;
    SymbolMap map_;
    ReedSolomonCode code_;
    Crc32 crc_;
};

} // namespace dramecc
