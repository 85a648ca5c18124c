#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankdens {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an exhaustive routine would exceed its iteration budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iteration budget for exhaustive searches. A limit of 0 means unlimited.
struct Budget {
    std::uint64_t limit = 0;

    void require(const BigInt& steps, const std::string& what) const;
    static Budget unlimited() { return {}; }
};

/// Budget taken from RANKDENS_BUDGET if set, otherwise 1e9 steps.
Budget default_budget();

BigInt ipow(const BigInt& base, unsigned exp);
std::uint64_t ipow64(std::uint64_t base, unsigned exp);

/// Binomial coefficient C(n, k) for a possibly huge n. Zero when k > n or n < 0.
BigInt binomial(const BigInt& n, long k);

/// Nearest double, safe when numerator and denominator overflow double.
double to_double(const Rational& r);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

/// Decimal expansion with `digits` fractional digits, truncated toward zero.
std::string decimal_truncated(const Rational& r, unsigned digits);

/// Decimal expansion with `digits` fractional digits, rounded half up.
std::string decimal_rounded(const Rational& r, unsigned digits);

/// A float with a certified absolute error bound: the true value lies in
/// [value - error, value + error].
struct Certified {
    double value = 0;
    double error = 0;

    double lo() const { return value - error; }
    double hi() const { return value + error; }
};

} // namespace rankdens
