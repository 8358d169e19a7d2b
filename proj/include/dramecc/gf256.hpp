#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace dramecc {

/// One 8-bit Galois symbol.
using FieldElement = std::uint8_t;

/// Raised for operations outside the field's domain (inverse of zero, 0^0).
class FieldDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// GF(2^8) built from a primitive reduction polynomial with generator
/// alpha = 0x02. Tables are filled once in the constructor; afterwards the
/// object is immutable and can be shared freely between threads.
class GaloisField {
public:
    static constexpr unsigned kDefaultPolynomial = 0x11D;
    static constexpr unsigned kOrder = 255; // size of the multiplicative group

    explicit GaloisField(unsigned primitive_poly = kDefaultPolynomial);

    unsigned primitive_poly() const noexcept { return poly_; }

    static constexpr FieldElement add(FieldElement a, FieldElement b) noexcept
    {
        return static_cast<FieldElement>(a ^ b);
    }

    FieldElement mul(FieldElement a, FieldElement b) const noexcept
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }

    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, long long e) const;

    /// alpha^e for any integer e (reduced mod 255).
    FieldElement alpha_pow(long long e) const noexcept
    {
        long long r = e % kOrder;
        if (r < 0)
            r += kOrder;
        return exp_[static_cast<std::size_t>(r)];
    }

    /// Discrete log base alpha; a must be nonzero.
    unsigned log(FieldElement a) const;

    /// exp table has 2*255 entries so log(a)+log(b) never needs a modulo.
    const std::array<FieldElement, 2 * kOrder>& antilog_table() const noexcept { return exp_; }
    const std::array<std::uint16_t, 256>& log_table() const noexcept { return log_; }

private:
    unsigned poly_;
    std::array<FieldElement, 2 * kOrder> exp_{};
    std::array<std::uint16_t, 256> log_{};
};

/// Process-wide field over 0x11D used by every scheme in this library.
const GaloisField& default_field();

} // namespace dramecc
