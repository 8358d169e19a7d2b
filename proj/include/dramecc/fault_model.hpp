#pragma once

#include "dramecc/geometry.hpp"
#include "dramecc/rng.hpp"
#include "dramecc/schemes.hpp"

#include <array>
#include <string_view>

namespace dramecc {

enum class FaultMode {
    OneBit,
    OnePin,
    ChipRowBank,
    Column,
    Bus,
    CorrelatedBus,
    OneBitPlusPin,
    OneBitPlusChip,
    OneBitPlusBus,
    PinPlusPin,
    ChipPlusChip,
    ThreeFault,
};

inline constexpr std::array<FaultMode, 12> kAllFaultModes = {
    FaultMode::OneBit,        FaultMode::OnePin,         FaultMode::ChipRowBank,   FaultMode::Column,
    FaultMode::Bus,           FaultMode::CorrelatedBus,  FaultMode::OneBitPlusPin, FaultMode::OneBitPlusChip,
    FaultMode::OneBitPlusBus, FaultMode::PinPlusPin,     FaultMode::ChipPlusChip,  FaultMode::ThreeFault,
};

/// one-bit, one-pin, chip, column, bus, correlated-bus, bit+pin, bit+chip,
/// bit+bus, pin+pin, chip+chip, three-fault.
std::string_view fault_mode_name(FaultMode mode) noexcept;
/// Throws std::invalid_argument for unknown names.
FaultMode fault_mode_by_name(std::string_view name);

/// Extent of a pin fault. AllBeats flips the pin's two bits in the symbol
/// of every codeword (8 bits); SymbolWindow flips them in one randomly
/// chosen 2-beat window only (2 bits).
enum class PinFaultScope { AllBeats, SymbolWindow };

std::string_view pin_scope_name(PinFaultScope scope) noexcept;
/// "all-beats" or "window"; throws std::invalid_argument otherwise.
PinFaultScope pin_scope_by_name(std::string_view name);

/// True for modes whose errors stay inside one chip lane.
constexpr bool single_lane_mode(FaultMode mode) noexcept
{
    return mode == FaultMode::OneBit || mode == FaultMode::OnePin || mode == FaultMode::ChipRowBank ||
           mode == FaultMode::Column || mode == FaultMode::Bus;
}

/// A fault over one stored line. Bits in `flip` are inverted; bits in
/// `stuck` are forced to the matching bit of `stuck_value`. The two sets
/// never overlap.
struct ErrorMask {
    LineBits flip;
    LineBits stuck;
    LineBits stuck_value;

    ErrorMask() = default;
    explicit ErrorMask(RankGeometry geom) : flip(geom), stuck(geom), stuck_value(geom) {}

    /// Every bit position the fault touches.
    LineBits bits() const
    {
        LineBits b = flip;
        b |= stuck;
        return b;
    }
    bool has_stuck() const noexcept { return stuck.any(); }
    bool empty() const noexcept { return !flip.any() && !stuck.any(); }
};

/// Draws a fault for `mode`. When `target` is given, stuck-at components are
/// redrawn until they change at least one bit of it.
ErrorMask gen_mask(FaultMode mode, RankGeometry geom, CounterRng& rng, const LineBits* target = nullptr,
                   PinFaultScope pin_scope = PinFaultScope::AllBeats);
/// Allocation-free variant; `out` is overwritten.
void gen_mask_into(FaultMode mode, RankGeometry geom, CounterRng& rng, const LineBits* target, ErrorMask& out,
                   PinFaultScope pin_scope = PinFaultScope::AllBeats);

/// Applies `mask` to `bits` in place. Throws std::invalid_argument on shape
/// mismatch or an empty mask.
void apply_fault_in_place(LineBits& bits, const ErrorMask& mask);
LineBits apply_fault(const LineBits& bits, const ErrorMask& mask);
StoredLine apply_fault(const StoredLine& line, const ErrorMask& mask);

} // namespace dramecc
