#pragma once

#include "dramecc/gf256.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace dramecc {

/// One rank of x4 devices. Every chip drives its own 4-wire lane; a cache
/// line crosses the bus in 8 beats.
struct RankGeometry {
    static constexpr int kPinsPerChip = 4;
    static constexpr int kBeats = 8;
    static constexpr int kMaxChips = 19;

    int chips = 18;

    constexpr int wires() const noexcept { return chips * kPinsPerChip; }
    constexpr int bits_per_beat() const noexcept { return wires(); }
    constexpr int total_bits() const noexcept { return wires() * kBeats; }

    /// Throws std::invalid_argument unless 1 <= chips <= kMaxChips.
    void validate() const;
    friend constexpr bool operator==(const RankGeometry&, const RankGeometry&) = default;
};

/// Bit image of one cache line on the wires, indexed [beat][wire] with
/// wire = chip * 4 + pin. Stored lane-major: each chip's 32 bits live in one
/// word with bit (beat * 4 + pin), which keeps per-chip faults and symbol
/// gathers cheap.
class LineBits {
public:
    LineBits() = default;
    explicit LineBits(RankGeometry geom);

    RankGeometry geometry() const noexcept { return {chips_}; }
    int chips() const noexcept { return chips_; }

    bool bit(int beat, int wire) const;
    void set_bit(int beat, int wire, bool value);
    void flip_bit(int beat, int wire);

    /// The 32 bits chip `chip` supplies across all beats.
    std::uint32_t lane(int chip) const noexcept { return lanes_[static_cast<std::size_t>(chip)]; }
    void set_lane(int chip, std::uint32_t bits) noexcept { lanes_[static_cast<std::size_t>(chip)] = bits; }

    /// The 4-bit word chip `chip` supplies in beat `beat`.
    unsigned word(int beat, int chip) const noexcept { return (lane(chip) >> (4 * beat)) & 0xFu; }

    int popcount() const noexcept;
    bool any() const noexcept;

    LineBits& operator^=(const LineBits& other);
    LineBits& operator|=(const LineBits& other);
    LineBits& operator&=(const LineBits& other);
    friend LineBits operator^(LineBits a, const LineBits& b) { return a ^= b; }
    friend bool operator==(const LineBits& a, const LineBits& b) noexcept
    {
        return a.chips_ == b.chips_ && a.lanes_ == b.lanes_;
    }

private:
    void check_shape(const LineBits& other) const;
    void check_coord(int beat, int wire) const;

    int chips_ = 0;
    std::array<std::uint32_t, RankGeometry::kMaxChips> lanes_{};
};

enum class SymbolLayout {
    /// Beats 2w and 2w+1 of chip c form symbol c of codeword w.
    Interleaved2Beat,
    /// All 8 beats of wire q form symbol q of a single codeword.
    Vertical8Beat,
};

/// Bijection between stored bits and codeword symbols for one layout.
///
/// Interleaved2Beat: 4 codewords of `chips` symbols. Pin p of chip c gives
/// symbol bit 2p from beat 2w and bit 2p+1 from beat 2w+1.
/// Vertical8Beat: 1 codeword of `chips * 4` symbols; beat b is bit b.
class SymbolMap {
public:
    SymbolMap(SymbolLayout layout, RankGeometry geom);

    SymbolLayout layout() const noexcept { return layout_; }
    RankGeometry geometry() const noexcept { return geom_; }
    int codewords() const noexcept { return layout_ == SymbolLayout::Interleaved2Beat ? 4 : 1; }
    int symbols_per_codeword() const noexcept
    {
        return layout_ == SymbolLayout::Interleaved2Beat ? geom_.chips : geom_.wires();
    }
    int total_symbols() const noexcept { return codewords() * symbols_per_codeword(); }

    /// Flat gather: codeword-major, out.size() == total_symbols().
    void gather_into(const LineBits& line, std::span<FieldElement> out) const;
    /// Flat scatter, inverse of gather_into.
    void scatter_from(std::span<const FieldElement> symbols, LineBits& line) const;

    std::vector<std::vector<FieldElement>> gather(const LineBits& line) const;
    LineBits scatter(const std::vector<std::vector<FieldElement>>& codewords) const;

    /// (beat, wire) of bit `bit` of symbol `symbol` in codeword `codeword`.
    std::pair<int, int> locate(int codeword, int symbol, int bit) const;

private:
    void check_line(const LineBits& line) const;

    SymbolLayout layout_;
    RankGeometry geom_;
};

} // namespace dramecc
