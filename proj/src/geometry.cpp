#include "dramecc/geometry.hpp"

#include <stdexcept>
#include <string>

namespace dramecc {

void RankGeometry::validate() const
{
    if (chips < 1 || chips > kMaxChips)
        throw std::invalid_argument("rank must have 1.." + std::to_string(kMaxChips) +
                                    " chips, got " + std::to_string(chips));
}

LineBits::LineBits(RankGeometry geom) : chips_(geom.chips) { geom.validate(); }

void LineBits::check_coord(int beat, int wire) const
{
    if (beat < 0 || beat >= RankGeometry::kBeats || wire < 0 || wire >= chips_ * RankGeometry::kPinsPerChip)
        throw std::out_of_range("bit coordinate (" + std::to_string(beat) + ", " + std::to_string(wire) +
                                ") outside the line");
}

void LineBits::check_shape(const LineBits& other) const
{
    if (chips_ != other.chips_)
        throw std::invalid_argument("line shapes differ: " + std::to_string(chips_) + " vs " +
                                    std::to_string(other.chips_) + " chips");
}

bool LineBits::bit(int beat, int wire) const
{
    check_coord(beat, wire);
    return (lane(wire / 4) >> (beat * 4 + wire % 4)) & 1u;
}

void LineBits::set_bit(int beat, int wire, bool value)
{
    check_coord(beat, wire);
    const std::uint32_t m = 1u << (beat * 4 + wire % 4);
    auto& l = lanes_[static_cast<std::size_t>(wire / 4)];
    l = value ? (l | m) : (l & ~m);
}

void LineBits::flip_bit(int beat, int wire)
{
    check_coord(beat, wire);
    lanes_[static_cast<std::size_t>(wire / 4)] ^= 1u << (beat * 4 + wire % 4);
}

int LineBits::popcount() const noexcept
{
    int n = 0;
    for (int c = 0; c < chips_; ++c)
        n += std::popcount(lane(c));
    return n;
}

bool LineBits::any() const noexcept
{
    std::uint32_t acc = 0;
    for (int c = 0; c < chips_; ++c)
        acc |= lane(c);
    return acc != 0;
}

LineBits& LineBits::operator^=(const LineBits& other)
{
    check_shape(other);
    for (int c = 0; c < chips_; ++c)
        lanes_[static_cast<std::size_t>(c)] ^= other.lane(c);
    return *this;
}

LineBits& LineBits::operator|=(const LineBits& other)
{
    check_shape(other);
    for (int c = 0; c < chips_; ++c)
        lanes_[static_cast<std::size_t>(c)] |= other.lane(c);
    return *this;
}

LineBits& LineBits::operator&=(const LineBits& other)
{
    check_shape(other);
    for (int c = 0; c < chips_; ++c)
        lanes_[static_cast<std::size_t>(c)] &= other.lane(c);
    return *this;
}

namespace {

// A lane byte holds beat 2w in its low nibble and beat 2w+1 in its high
// nibble; the symbol takes pin p's two bits at positions 2p and 2p+1.
struct ShuffleTables {
    std::array<FieldElement, 256> to_symbol{};
    std::array<std::uint8_t, 256> to_lane{};

    constexpr ShuffleTables()
    {
        for (unsigned b = 0; b < 256; ++b) {
            unsigned s = 0;
            for (unsigned p = 0; p < 4; ++p) {
                s |= ((b >> p) & 1u) << (2 * p);
                s |= ((b >> (4 + p)) & 1u) << (2 * p + 1);
            }
            to_symbol[b] = static_cast<FieldElement>(s);
            to_lane[s] = static_cast<std::uint8_t>(b);
        }
    }
};

constexpr ShuffleTables kShuffle;

} // namespace

SymbolMap::SymbolMap(SymbolLayout layout, RankGeometry geom) : layout_(layout), geom_(geom)
{
    geom.validate();
}

void SymbolMap::check_line(const LineBits& line) const
{
    if (line.chips() != geom_.chips)
        throw std::invalid_argument("line has " + std::to_string(line.chips()) + " chips, map expects " +
                                    std::to_string(geom_.chips));
}

void SymbolMap::gather_into(const LineBits& line, std::span<FieldElement> out) const
{
    check_line(line);
    if (out.size() != static_cast<std::size_t>(total_symbols()))
        throw std::invalid_argument("gather buffer has wrong size");
    const int chips = geom_.chips;
    if (layout_ == SymbolLayout::Interleaved2Beat) {
        for (int c = 0; c < chips; ++c) {
            const std::uint32_t l = line.lane(c);
            for (int w = 0; w < 4; ++w)
                out[static_cast<std::size_t>(w * chips + c)] = kShuffle.to_symbol[(l >> (8 * w)) & 0xFFu];
        }
        return;
    }
    for (int c = 0; c < chips; ++c) {
        const std::uint32_t l = line.lane(c);
        for (int p = 0; p < 4; ++p) {
            unsigned s = 0;
            for (int b = 0; b < 8; ++b)
                s |= ((l >> (4 * b + p)) & 1u) << b;
            out[static_cast<std::size_t>(c * 4 + p)] = static_cast<FieldElement>(s);
        }
    }
}

void SymbolMap::scatter_from(std::span<const FieldElement> symbols, LineBits& line) const
{
    check_line(line);
    if (symbols.size() != static_cast<std::size_t>(total_symbols()))
        throw std::invalid_argument("scatter input has wrong size");
    const int chips = geom_.chips;
    if (layout_ == SymbolLayout::Interleaved2Beat) {
        for (int c = 0; c < chips; ++c) {
            std::uint32_t l = 0;
            for (int w = 0; w < 4; ++w)
                l |= static_cast<std::uint32_t>(kShuffle.to_lane[symbols[static_cast<std::size_t>(w * chips + c)]])
                     << (8 * w);
            line.set_lane(c, l);
        }
        return;
    }
    for (int c = 0; c < chips; ++c) {
        std::uint32_t l = 0;
        for (int p = 0; p < 4; ++p) {
            const unsigned s = symbols[static_cast<std::size_t>(c * 4 + p)];
            for (int b = 0; b < 8; ++b)
                l |= ((s >> b) & 1u) << (4 * b + p);
        }
        line.set_lane(c, l);
    }
}

std::vector<std::vector<FieldElement>> SymbolMap::gather(const LineBits& line) const
{
    std::vector<FieldElement> flat(static_cast<std::size_t>(total_symbols()));
    gather_into(line, flat);
    std::vector<std::vector<FieldElement>> out;
    const auto per = static_cast<std::size_t>(symbols_per_codeword());
    for (int w = 0; w < codewords(); ++w)
        out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(w * per),
                         flat.begin() + static_cast<std::ptrdiff_t>((w + 1) * per));
    return out;
}

LineBits SymbolMap::scatter(const std::vector<std::vector<FieldElement>>& codewords) const
{
    if (codewords.size() != static_cast<std::size_t>(this->codewords()))
        throw std::invalid_argument("expected " + std::to_string(this->codewords()) + " codewords");
    std::vector<FieldElement> flat;
    for (const auto& cw : codewords) {
        if (cw.size() != static_cast<std::size_t>(symbols_per_codeword()))
            throw std::invalid_argument("codeword has " + std::to_string(cw.size()) + " symbols, expected " +
                                        std::to_string(symbols_per_codeword()));
        flat.insert(flat.end(), cw.begin(), cw.end());
    }
    LineBits line(geom_);
    scatter_from(flat, line);
    return line;
}

std::pair<int, int> SymbolMap::locate(int codeword, int symbol, int bit) const
{
    if (codeword < 0 || codeword >= codewords() || symbol < 0 || symbol >= symbols_per_codeword() || bit < 0 ||
        bit >= 8)
        throw std::out_of_range("symbol coordinate outside the map");
    if (layout_ == SymbolLayout::Interleaved2Beat)
        return {2 * codeword + (bit & 1), symbol * 4 + bit / 2};
    return {bit, symbol};
}

} // namespace dramecc
