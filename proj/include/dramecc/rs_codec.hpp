#pragma once

#include "dramecc/gf256.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dramecc {

enum class RsOutcomeKind { NoError, Corrected, Uncorrectable };

const char* to_string(RsOutcomeKind kind) noexcept;

struct RsDecodeOutcome {
    RsOutcomeKind kind = RsOutcomeKind::NoError;
    /// Repaired word; empty when kind == Uncorrectable.
    std::vector<FieldElement> corrected;
    /// Symbol indices that were repaired, ascending (Corrected only).
    std::vector<int> error_positions;
    int error_count = 0;
};

/// Systematic RS(n, k) over GF(2^8) with generator (x - a^1)...(x - a^(n-k)).
///
/// Codewords are stored data-first: symbol i is the coefficient of
/// x^(n-1-i), so the check symbols occupy indices k..n-1. Codes with n < 255
/// are shortened; the missing leading symbols are implicitly zero.
///
/// The object is immutable after construction. The span-based methods do not
/// allocate and are the ones the simulation hot loop uses.
class ReedSolomonCode {
public:
    static constexpr int kMaxLength = 255;

    ReedSolomonCode(int n, int k, const GaloisField& field = default_field());

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int parity() const noexcept { return n_ - k_; }
    /// Correction radius floor((n-k)/2).
    int t() const noexcept { return (n_ - k_) / 2; }
    const GaloisField& field() const noexcept { return *field_; }

    /// Monic generator, highest degree first (n-k+1 coefficients).
    const std::vector<FieldElement>& generator() const noexcept { return generator_; }

    std::vector<FieldElement> encode(std::span<const FieldElement> data) const;
    /// Writes the full codeword (data then checks) into `out` (length n).
    void encode_into(std::span<const FieldElement> data, std::span<FieldElement> out) const;

    std::vector<FieldElement> syndromes(std::span<const FieldElement> word) const;
    /// Fills out[0..n-k) with S_1..S_(n-k); returns true when all are zero.
    bool syndromes_into(std::span<const FieldElement> word, std::span<FieldElement> out) const;
    bool is_codeword(std::span<const FieldElement> word) const;

    /// Berlekamp-Massey + Chien + Forney bounded-distance decoder.
    RsDecodeOutcome decode(std::span<const FieldElement> word) const;
    /// Same decoder, repairing `word` in place. On Uncorrectable the word is
    /// left untouched. Returns the outcome kind only.
    RsOutcomeKind decode_in_place(std::span<FieldElement> word) const;
    /// decode_in_place for a word whose syndromes (from syndromes_into) are
    /// already known and not all zero.
    RsOutcomeKind correct_in_place(std::span<FieldElement> word, std::span<const FieldElement> synd) const;

    /// Key equation solved with the extended Euclidean (Sugiyama) algorithm.
    /// Same contract as decode(); kept as an independent cross-check.
    RsDecodeOutcome decode_euclidean(std::span<const FieldElement> word) const;

private:
    using Poly = std::array<FieldElement, kMaxLength + 1>;

    void check_length(std::size_t got, std::size_t want, const char* what) const
    {
        if (got != want) [[unlikely]]
            length_error(got, want, what);
    }
    [[noreturn]] static void length_error(std::size_t got, std::size_t want, const char* what);
    void encode_lfsr(std::span<const FieldElement> data, std::span<FieldElement> out) const;
    RsOutcomeKind correct_with_syndromes(std::span<FieldElement> word,
                                         std::span<const FieldElement> synd,
                                         std::vector<int>* positions) const;
    RsOutcomeKind apply_locator(std::span<FieldElement> word, std::span<const FieldElement> synd,
                                const Poly& lambda, int degree,
                                std::vector<int>* positions) const;

    int n_;
    int k_;
    const GaloisField* field_;
    std::vector<FieldElement> generator_;
    /// gen_mul_[j][x] = generator coefficient (j+1) * x
    std::vector<std::array<FieldElement, 256>> gen_mul_;
    /// root_mul_[j][x] = a^(j+1) * x
    std::vector<std::array<FieldElement, 256>> root_mul_;
    /// For n-k <= 16: contribution of value x at position i to the check
    /// symbols (parity_lut_) and syndromes (syndrome_lut_), packed 8 per
    /// word, lut_words_ words per (i, x) entry. Empty for wider codes.
    int lut_words_ = 0;
    std::vector<std::uint64_t> parity_lut_;
    std::vector<std::uint64_t> syndrome_lut_;
};

} // namespace dramecc
