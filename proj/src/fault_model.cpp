#include "dramecc/fault_model.hpp"

#include <stdexcept>
#include <string>

namespace dramecc {

std::string_view fault_mode_name(FaultMode mode) noexcept
{
    switch (mode) {
    case FaultMode::OneBit: return "one-bit";
    case FaultMode::OnePin: return "one-pin";
    case FaultMode::ChipRowBank: return "chip";
    case FaultMode::Column: return "column";
    case FaultMode::Bus: return "bus";
    case FaultMode::CorrelatedBus: return "correlated-bus";
    case FaultMode::OneBitPlusPin: return "bit+pin";
    case FaultMode::OneBitPlusChip: return "bit+chip";
    case FaultMode::OneBitPlusBus: return "bit+bus";
    case FaultMode::PinPlusPin: return "pin+pin";
    case FaultMode::ChipPlusChip: return "chip+chip";
    case FaultMode::ThreeFault: return "three-fault";
    }
    return "?";
}

FaultMode fault_mode_by_name(std::string_view name)
{
    for (FaultMode m : kAllFaultModes)
        if (fault_mode_name(m) == name)
            return m;
    throw std::invalid_argument("unknown fault mode '" + std::string(name) + "'");
}

std::string_view pin_scope_name(PinFaultScope scope) noexcept
{
    return scope == PinFaultScope::AllBeats ? "all-beats" : "window";
}

PinFaultScope pin_scope_by_name(std::string_view name)
{
    if (name == "all-beats")
        return PinFaultScope::AllBeats;
    if (name == "window")
        return PinFaultScope::SymbolWindow;
    throw std::invalid_argument("unknown pin fault scope '" + std::string(name) + "'");
}

namespace {

constexpr std::uint32_t kAllBeats = 0xFFFFFFFFu;

// Lane bits of the nibbles picked by an 8-bit beat selector.
constexpr std::uint32_t beat_mask(unsigned selector) noexcept
{
    std::uint32_t m = 0;
    for (int b = 0; b < 8; ++b)
        if ((selector >> b) & 1u)
            m |= 0xFu << (4 * b);
    return m;
}

class Injector {
public:
    Injector(RankGeometry geom, CounterRng& rng, const LineBits* target, ErrorMask& out, PinFaultScope pin_scope)
        : geom_(geom), rng_(rng), target_(target), out_(out), pin_scope_(pin_scope)
    {
    }

    int chips() const noexcept { return geom_.chips; }

    int pick_chip() { return static_cast<int>(rng_.below(static_cast<std::uint32_t>(geom_.chips))); }

    int pick_other_chip(int a)
    {
        int b = static_cast<int>(rng_.below(static_cast<std::uint32_t>(geom_.chips - 1)));
        return b >= a ? b + 1 : b;
    }

    void flip(int chip, std::uint32_t bits)
    {
        out_.flip.set_lane(chip, out_.flip.lane(chip) ^ bits);
    }

    void stick(int chip, std::uint32_t where, std::uint32_t value)
    {
        out_.stuck.set_lane(chip, out_.stuck.lane(chip) | where);
        out_.stuck_value.set_lane(chip, (out_.stuck_value.lane(chip) & ~where) | (value & where));
    }

    bool changes(int chip, std::uint32_t where, std::uint32_t value) const noexcept
    {
        if (target_ == nullptr)
            return true;
        return ((target_->lane(chip) ^ value) & where) != 0;
    }

    void one_bit(int chip) { flip(chip, 1u << rng_.below(32)); }

    void one_pin(int chip)
    {
        const unsigned pin = rng_.below(4);
        if (pin_scope_ == PinFaultScope::AllBeats) {
            flip(chip, 0x11111111u << pin);
            return;
        }
        // both bits the pin carries inside one 2-beat symbol window
        const unsigned window = rng_.below(4);
        flip(chip, (1u << (8 * window + pin)) | (1u << (8 * window + 4 + pin)));
    }

    void chip_row_bank(int chip)
    {
        for (;;) {
            switch (rng_.below(3)) {
            case 0: {
                const std::uint32_t pattern = rng_.next32();
                if (pattern != 0) {
                    // replacing with a uniform pattern is a uniform XOR
                    flip(chip, pattern);
                    return;
                }
                break;
            }
            case 1:
                if (changes(chip, kAllBeats, 0)) {
                    stick(chip, kAllBeats, 0);
                    return;
                }
                break;
            default:
                if (changes(chip, kAllBeats, kAllBeats)) {
                    stick(chip, kAllBeats, kAllBeats);
                    return;
                }
                break;
            }
        }
    }

    void column()
    {
        for (;;) {
            const int chip = pick_chip();
            const std::uint32_t where = 1u << rng_.below(32);
            const std::uint32_t value = (rng_() & 1u) ? kAllBeats : 0u;
            if (changes(chip, where, value)) {
                stick(chip, where, value);
                return;
            }
        }
    }

    // Random nibbles on the selected beats of each lane; every lane must end
    // up with at least one corrupted word.
    template <std::size_t N>
    void bus(const std::array<int, N>& lanes)
    {
        std::array<std::uint32_t, N> err{};
        for (;;) {
            const std::uint32_t sel = beat_mask(rng_.below(256));
            bool ok = sel != 0;
            for (std::size_t i = 0; i < N; ++i) {
                err[i] = rng_.next32() & sel;
                ok &= err[i] != 0;
            }
            if (ok)
                break;
        }
        for (std::size_t i = 0; i < N; ++i)
            flip(lanes[i], err[i]);
    }

    void random_lane(int chip)
    {
        std::uint32_t e = 0;
        while (e == 0)
            e = rng_.next32();
        flip(chip, e);
    }

private:
    RankGeometry geom_;
    CounterRng& rng_;
    const LineBits* target_;
    ErrorMask& out_;
    PinFaultScope pin_scope_;
};

} // namespace

void gen_mask_into(FaultMode mode, RankGeometry geom, CounterRng& rng, const LineBits* target, ErrorMask& out,
                   PinFaultScope pin_scope)
{
    geom.validate();
    if (target != nullptr && target->chips() != geom.chips)
        throw std::invalid_argument("target line does not match the rank geometry");
    const int min_chips = mode == FaultMode::ThreeFault ? 3 : single_lane_mode(mode) ? 1 : 2;
    if (geom.chips < min_chips)
        throw std::invalid_argument(std::string(fault_mode_name(mode)) + " needs at least " +
                                    std::to_string(min_chips) + " chips");
    out = ErrorMask(geom);
    Injector inj(geom, rng, target, out, pin_scope);

    switch (mode) {
    case FaultMode::OneBit: inj.one_bit(inj.pick_chip()); break;
    case FaultMode::OnePin: inj.one_pin(inj.pick_chip()); break;
    case FaultMode::ChipRowBank: inj.chip_row_bank(inj.pick_chip()); break;
    case FaultMode::Column: inj.column(); break;
    case FaultMode::Bus: inj.bus(std::array{inj.pick_chip()}); break;
    case FaultMode::CorrelatedBus: {
        const int c = static_cast<int>(rng.below(static_cast<std::uint32_t>(geom.chips - 1)));
        inj.bus(std::array{c, c + 1});
        break;
    }
    case FaultMode::OneBitPlusPin: {
        const int a = inj.pick_chip();
        inj.one_pin(a);
        inj.one_bit(inj.pick_other_chip(a));
        break;
    }
    case FaultMode::OneBitPlusChip: {
        const int a = inj.pick_chip();
        inj.chip_row_bank(a);
        inj.one_bit(inj.pick_other_chip(a));
        break;
    }
    case FaultMode::OneBitPlusBus: {
        const int a = inj.pick_chip();
        inj.bus(std::array{a});
        inj.one_bit(inj.pick_other_chip(a));
        break;
    }
    case FaultMode::PinPlusPin: {
        const int a = inj.pick_chip();
        inj.one_pin(a);
        inj.one_pin(inj.pick_other_chip(a));
        break;
    }
    case FaultMode::ChipPlusChip: {
        const int a = inj.pick_chip();
        inj.chip_row_bank(a);
        inj.chip_row_bank(inj.pick_other_chip(a));
        break;
    }
    case FaultMode::ThreeFault: {
        const int a = inj.pick_chip();
        const int b = inj.pick_other_chip(a);
        int c = static_cast<int>(rng.below(static_cast<std::uint32_t>(geom.chips - 2)));
        for (int x : {std::min(a, b), std::max(a, b)})
            if (c >= x)
                ++c;
        inj.random_lane(a);
        inj.random_lane(b);
        inj.random_lane(c);
        break;
    }
    }
}

ErrorMask gen_mask(FaultMode mode, RankGeometry geom, CounterRng& rng, const LineBits* target,
                   PinFaultScope pin_scope)
{
    ErrorMask m;
    gen_mask_into(mode, geom, rng, target, m, pin_scope);
    return m;
}

void apply_fault_in_place(LineBits& bits, const ErrorMask& mask)
{
    if (bits.chips() != mask.flip.chips() || bits.chips() != mask.stuck.chips() ||
        bits.chips() != mask.stuck_value.chips())
        throw std::invalid_argument("fault mask shape does not match the line");
    if (mask.empty())
        throw std::invalid_argument("fault mask is empty");
    for (int c = 0; c < bits.chips(); ++c) {
        const std::uint32_t s = mask.stuck.lane(c);
        bits.set_lane(c, ((bits.lane(c) & ~s) | (mask.stuck_value.lane(c) & s)) ^ mask.flip.lane(c));
    }
}

LineBits apply_fault(const LineBits& bits, const ErrorMask& mask)
{
    LineBits out = bits;
    apply_fault_in_place(out, mask);
    return out;
}

StoredLine apply_fault(const StoredLine& line, const ErrorMask& mask)
{
    StoredLine out = line;
    apply_fault_in_place(out.bits, mask);
    return out;
}

} // namespace dramecc
