#include "dramecc/gf256.hpp"

#include <string>

namespace dramecc {

GaloisField::GaloisField(unsigned primitive_poly) : poly_(primitive_poly)
{
    if (primitive_poly < 0x100 || primitive_poly > 0x1FF)
        throw std::invalid_argument("reduction polynomial must have degree 8");

    std::array<bool, 256> seen{};
    unsigned x = 1;
    for (unsigned i = 0; i < kOrder; ++i) {
        if (seen[x])
            throw std::invalid_argument("polynomial " + std::to_string(primitive_poly) +
                                        " is not primitive");
        seen[x] = true;
        exp_[i] = static_cast<FieldElement>(x);
        exp_[i + kOrder] = static_cast<FieldElement>(x);
        log_[x] = static_cast<std::uint16_t>(i);
        x <<= 1;
        if (x & 0x100)
            x ^= primitive_poly;
    }
    if (x != 1)
        throw std::invalid_argument("polynomial is not primitive");
    log_[0] = 0; // never read: every caller filters zero first
}

FieldElement GaloisField::div(FieldElement a, FieldElement b) const
{
    if (b == 0)
        throw FieldDomainError("division by zero in GF(2^8)");
    if (a == 0)
        return 0;
    return exp_[log_[a] + kOrder - log_[b]];
}

FieldElement GaloisField::inv(FieldElement a) const
{
    if (a == 0)
        throw FieldDomainError("zero has no multiplicative inverse");
    return exp_[kOrder - log_[a]];
}

FieldElement GaloisField::pow(FieldElement a, long long e) const
{
    if (a == 0) {
        if (e == 0)
            throw FieldDomainError("0^0 is undefined");
        if (e < 0)
            throw FieldDomainError("negative power of zero");
        return 0;
    }
    return alpha_pow(static_cast<long long>(log_[a]) * (e % kOrder));
}

unsigned GaloisField::log(FieldElement a) const
{
    if (a == 0)
        throw FieldDomainError("log of zero");
    return log_[a];
}

const GaloisField& default_field()
{
    static const GaloisField field;
    return field;
}

} // namespace dramecc
