#include "dramecc/analytics.hpp"

#include <stdexcept>

namespace dramecc {

namespace {

BigInt pow2(int bits)
{
    BigInt r = 1;
    r <<= bits;
    return r;
}

BigInt ipow(const BigInt& base, int exp)
{
    BigInt r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// (2^m)^(n-k)
BigInt redundancy_space(const CodespaceModel& model)
{
    return pow2(model.m * (model.n - model.k));
}

} // namespace

void CodespaceModel::validate() const
{
    if (!(0 < k && k < n))
        throw std::invalid_argument("code parameters need 0 < k < n");
    if (m < 1 || m > 32)
        throw std::invalid_argument("symbol width m must be in [1, 32]");
    if (e < 1 || e > n)
        throw std::invalid_argument("error weight e must be in [1, n]");
}

BigInt binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    if (r > n - r)
        r = n - r;
    BigInt c = 1;
    for (int i = 1; i <= r; ++i) {
        c *= n - r + i;
        c /= i;
    }
    return c;
}

Rational codewords_within(const CodespaceModel& model)
{
    model.validate();
    const BigInt q1 = pow2(model.m) - 1;
    BigInt words = 0;
    for (int a = 1; a <= model.e; ++a)
        words += binomial(model.n, a) * ipow(q1, a);
    return Rational(words, redundancy_space(model)) - 1;
}

Rational MiscorrectionTerms::contributing_sum() const
{
    Rational s = 0;
    if (!at_e_vacuous)
        s += at_e;
    if (!at_e_minus_1_vacuous)
        s += at_e_minus_1;
    if (!at_e_plus_1_vacuous)
        s += at_e_plus_1;
    return s;
}

MiscorrectionTerms miscorrection_terms(const CodespaceModel& model)
{
    model.validate();
    if (model.e < 2)
        throw std::invalid_argument("miscorrection terms need e >= 2");
    const int n = model.n;
    const int e = model.e;
    const BigInt q1 = pow2(model.m) - 1;
    const BigInt q2 = pow2(model.m) - 2;
    const BigInt space = redundancy_space(model);

    MiscorrectionTerms t;
    t.at_e = Rational(binomial(n, e) * ipow(q1, e) * binomial(e, e - 1) * q2, space);
    t.at_e_minus_1 = Rational(binomial(n, e - 1) * ipow(q1, e - 1) * binomial(n - e + 1, 1) * q2, space);
    t.at_e_plus_1 = Rational(binomial(n, e + 1) * ipow(q1, e + 1) * binomial(e + 1, e), space);

    const int d = model.min_distance();
    t.at_e_vacuous = e < d;
    t.at_e_minus_1_vacuous = e - 1 < d;
    t.at_e_plus_1_vacuous = e + 1 < d || e + 1 > n;
    return t;
}

BigInt error_patterns(const CodespaceModel& model)
{
    model.validate();
    return binomial(model.n, model.e) * ipow(pow2(model.m) - 1, model.e);
}

Rational miscorrection_fraction(const CodespaceModel& model)
{
    return miscorrection_terms(model).contributing_sum() / Rational(error_patterns(model));
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

std::string to_decimal(const Rational& value, int digits)
{
    if (digits < 0)
        throw std::invalid_argument("digits must be non-negative");
    BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative)
        num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const BigInt scaled = (num * scale * 2 + den) / (den * 2);
    const BigInt whole = scaled / scale;
    std::string frac = BigInt(scaled % scale).str();
    std::string out = negative && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0)
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    return out;
}

std::string to_string(const Rational& value)
{
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

} // namespace dramecc
