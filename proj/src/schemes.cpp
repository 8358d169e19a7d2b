#include "dramecc/schemes.hpp"

#include <stdexcept>
#include <string>

namespace dramecc {

std::string_view scheme_name(SchemeId id) noexcept
{
    switch (id) {
    case SchemeId::Baseline: return "baseline";
    case SchemeId::ExtBaseline: return "ext-baseline";
    case SchemeId::BambooQPC: return "bamboo-qpc";
    case SchemeId::BambooExt: return "bamboo-ext";
    case SchemeId::SSCMSD: return "sscmsd";
    }
    return "?";
}

SchemeId scheme_by_name(std::string_view name)
{
    for (SchemeId id : kAllSchemes)
        if (scheme_name(id) == name)
            return id;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

const char* to_string(VerdictKind kind) noexcept
{
    switch (kind) {
    case VerdictKind::NoError: return "no-error";
    case VerdictKind::Corrected: return "corrected";
    case VerdictKind::DUE: return "due";
    }
    return "?";
}

namespace {

struct Layout {
    int chips;
    SymbolLayout style;
    int n;
    int k;
};

Layout layout_for(SchemeId id)
{
    switch (id) {
    case SchemeId::Baseline: return {18, SymbolLayout::Interleaved2Beat, 18, 16};
    case SchemeId::ExtBaseline: return {19, SymbolLayout::Interleaved2Beat, 19, 16};
    case SchemeId::BambooQPC: return {18, SymbolLayout::Vertical8Beat, 72, 64};
    case SchemeId::BambooExt: return {19, SymbolLayout::Vertical8Beat, 76, 64};
    case SchemeId::SSCMSD: return {19, SymbolLayout::Interleaved2Beat, 19, 17};
    }
    throw std::invalid_argument("bad scheme id");
}

constexpr int kBlockBytes = 16;
constexpr int kMaxSymbols = 76;

} // namespace

Scheme::Scheme(SchemeId id, const HashSpec& hash)
    : id_(id),
      geom_{layout_for(id).chips},
      map_(layout_for(id).style, geom_),
      code_(layout_for(id).n, layout_for(id).k),
      crc_(hash)
{
}

HashValue Scheme::line_hash(const std::uint8_t* data, const std::uint8_t* address) const noexcept
{
    const std::span<const std::uint8_t> d(data, kLineBytes);
    if (address == nullptr)
        return crc_.compute(d);
    return crc_.compute(d, std::span<const std::uint8_t>(address, kAddressBytes));
}

StoredLine Scheme::encode(const WriteInput& input) const
{
    if (input.data.size() != kLineBytes)
        throw std::invalid_argument("cache line must be 64 bytes, got " + std::to_string(input.data.size()));
    const std::uint8_t* addr = nullptr;
    if (input.address) {
        if (input.address->size() != kAddressBytes)
            throw std::invalid_argument("address must be 8 bytes, got " + std::to_string(input.address->size()));
        addr = input.address->data();
    }
    StoredLine out;
    encode_into(std::span<const std::uint8_t, kLineBytes>(input.data.data(), kLineBytes), addr, out);
    return out;
}

void Scheme::encode_into(std::span<const std::uint8_t, kLineBytes> data, const std::uint8_t* address,
                         StoredLine& out) const
{
    std::array<FieldElement, 4 * kMaxSymbols> flat{};
    const int n = code_.n();
    const int k = code_.k();
    if (map_.layout() == SymbolLayout::Vertical8Beat) {
        code_.encode_into(data, std::span(flat).first(static_cast<std::size_t>(n)));
    } else {
        std::array<FieldElement, 4> hash_sym{};
        if (uses_hash())
            hash_sym = hash_split(line_hash(data.data(), address));
        std::array<FieldElement, 19> dataword{};
        for (int w = 0; w < 4; ++w) {
            std::copy_n(data.begin() + w * kBlockBytes, kBlockBytes, dataword.begin());
            if (uses_hash())
                dataword[kBlockBytes] = hash_sym[static_cast<std::size_t>(w)];
            code_.encode_into(std::span(dataword).first(static_cast<std::size_t>(k)),
                              std::span(flat).subspan(static_cast<std::size_t>(w * n), static_cast<std::size_t>(n)));
        }
    }
    out.scheme = id_;
    out.bits = LineBits(geom_);
    map_.scatter_from(std::span(flat).first(static_cast<std::size_t>(map_.total_symbols())), out.bits);
}

LineVerdict Scheme::decode(const StoredLine& line, std::optional<std::span<const std::uint8_t>> address) const
{
    const std::uint8_t* addr = nullptr;
    if (address) {
        if (address->size() != kAddressBytes)
            throw std::invalid_argument("address must be 8 bytes, got " + std::to_string(address->size()));
        addr = address->data();
    }
    LineVerdict v;
    decode_into(line, addr, v);
    return v;
}

void Scheme::decode_into(const StoredLine& line, const std::uint8_t* address, LineVerdict& out) const
{
    if (line.scheme != id_ || line.bits.chips() != geom_.chips)
        throw std::invalid_argument("stored line was produced by " + std::string(scheme_name(line.scheme)) +
                                    ", not " + std::string(scheme_name(id_)));
    const int n = code_.n();
    const int words = map_.codewords();
    std::array<FieldElement, 4 * kMaxSymbols> flat{};
    map_.gather_into(line.bits, std::span(flat).first(static_cast<std::size_t>(map_.total_symbols())));
    auto codeword = [&](int w) {
        return std::span(flat).subspan(static_cast<std::size_t>(w * n), static_cast<std::size_t>(n));
    };

    out.codewords = words;
    out.hash_checked = false;
    out.scenario = 0;

    auto collect_data = [&] {
        if (map_.layout() == SymbolLayout::Vertical8Beat) {
            std::copy_n(flat.begin(), kLineBytes, out.data.begin());
            return;
        }
        for (int w = 0; w < 4; ++w)
            std::copy_n(flat.begin() + w * n, kBlockBytes, out.data.begin() + w * kBlockBytes);
    };
    auto collect_hash = [&] {
        std::array<FieldElement, 4> h{};
        for (int w = 0; w < 4; ++w)
            h[static_cast<std::size_t>(w)] = flat[static_cast<std::size_t>(w * n + kBlockBytes)];
        return hash_join(h);
    };

    if (!uses_hash()) {
        bool any_corrected = false;
        bool any_due = false;
        for (int w = 0; w < words; ++w) {
            const RsOutcomeKind kind = code_.decode_in_place(codeword(w));
            out.per_codeword[static_cast<std::size_t>(w)] = kind;
            any_corrected |= kind == RsOutcomeKind::Corrected;
            any_due |= kind == RsOutcomeKind::Uncorrectable;
        }
        out.kind = any_due ? VerdictKind::DUE : any_corrected ? VerdictKind::Corrected : VerdictKind::NoError;
        if (!any_due)
            collect_data();
        return;
    }

    // SSCMSD: hash of the raw data/hash symbols and all syndromes first.
    collect_data();
    const bool hash_match = line_hash(out.data.data(), address) == collect_hash();
    std::array<bool, 4> clean{};
    bool all_zero = true;
    const auto parity = static_cast<std::size_t>(code_.parity());
    std::array<FieldElement, 4 * 2> synd{};
    auto synd_of = [&](int w) { return std::span(synd).subspan(static_cast<std::size_t>(w) * parity, parity); };
    for (int w = 0; w < 4; ++w) {
        clean[static_cast<std::size_t>(w)] = code_.syndromes_into(codeword(w), synd_of(w));
        out.per_codeword[static_cast<std::size_t>(w)] = RsOutcomeKind::NoError;
        all_zero &= clean[static_cast<std::size_t>(w)];
    }
    out.hash_checked = true;
    out.scenario = classify_scenario(hash_match, all_zero);

    if (out.scenario == 1) {
        out.kind = VerdictKind::NoError;
        return;
    }
    if (out.scenario == 3) {
        out.kind = VerdictKind::DUE;
        return;
    }

    bool any_due = false;
    for (int w = 0; w < 4; ++w) {
        if (clean[static_cast<std::size_t>(w)])
            continue;
        const RsOutcomeKind kind = code_.correct_in_place(codeword(w), synd_of(w));
        out.per_codeword[static_cast<std::size_t>(w)] = kind;
        any_due |= kind == RsOutcomeKind::Uncorrectable;
    }
    if (any_due) {
        out.kind = VerdictKind::DUE;
        return;
    }
    collect_data();
    out.kind = line_hash(out.data.data(), address) == collect_hash() ? VerdictKind::Corrected : VerdictKind::DUE;
}

} // namespace dramecc
