#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dramecc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sphere-counting model of an RS(n, k) code over GF(2^m) hit by e symbol errors.
struct CodespaceModel {
    int n = 18;
    int k = 16;
    int m = 8;
    int e = 2;

    int min_distance() const noexcept { return n - k + 1; }

    /// Throws std::invalid_argument unless 0 < k < n, 1 <= m <= 32 and 1 <= e <= n.
    void validate() const;
};

BigInt binomial(int n, int r);

/// Average number of other codewords within Hamming distance e of a codeword.
Rational codewords_within(const CodespaceModel& model);

/// Number of e-symbol errors expected to land in the correction sphere of a
/// codeword at distance e, e-1 and e+1 from the transmitted one. A term is
/// vacuous when its distance is below the code's minimum distance.
struct MiscorrectionTerms {
    Rational at_e;
    Rational at_e_minus_1;
    Rational at_e_plus_1;
    bool at_e_vacuous = false;
    bool at_e_minus_1_vacuous = false;
    bool at_e_plus_1_vacuous = false;

    Rational contributing_sum() const;
};

/// Requires e >= 2.
MiscorrectionTerms miscorrection_terms(const CodespaceModel& model);

/// C(n,e) (2^m - 1)^e
BigInt error_patterns(const CodespaceModel& model);

/// Expected miscorrected share of all e-symbol errors. Vacuous terms are dropped.
Rational miscorrection_fraction(const CodespaceModel& model);

double to_double(const Rational& value);

/// Fixed-point rendering with `digits` decimals, rounded half away from zero.
std::string to_decimal(const Rational& value, int digits);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

} // namespace dramecc
