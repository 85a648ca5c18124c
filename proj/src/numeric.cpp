#include "rankdens/numeric.hpp"

#include <cmath>
#include <cstdlib>

namespace rankdens {

void Budget::require(const BigInt& steps, const std::string& what) const {
    if (limit != 0 && steps > limit)
        throw budget_exceeded(what + ": " + steps.str() + " steps exceeds budget " +
                              std::to_string(limit));
}

Budget default_budget() {
    Budget b{1000000000ULL};
    if (const char* env = std::getenv("RANKDENS_BUDGET")) {
        try {
            double v = std::stod(env);
            if (v > 0) b.limit = static_cast<std::uint64_t>(v);
        } catch (...) {
        }
    }
    return b;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

std::uint64_t ipow64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

BigInt binomial(const BigInt& n, long k) {
    if (k < 0 || n < 0 || BigInt(k) > n) return 0;
    BigInt kk = k;
    if (n - kk < kk) kk = n - kk;
    long kl = static_cast<long>(kk);
    BigInt r = 1;
    for (long i = 1; i <= kl; ++i) {
        r *= n - kl + i;
        r /= i; // exact: r is C(n-kl+i, i) here
    }
    return r;
}

double to_double(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (num == 0) return 0.0;
    bool neg = num < 0;
    if (neg) num = -num;
    long nb = static_cast<long>(boost::multiprecision::msb(num));
    long db = static_cast<long>(boost::multiprecision::msb(den));
    // keep about 64 significant bits of the quotient
    long shift = 64 - (nb - db);
    BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
    double v = std::ldexp(static_cast<double>(q), static_cast<int>(-shift));
    return neg ? -v : v;
}

std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

std::string format_scaled(BigInt scaled, bool neg, unsigned digits) {
    std::string s = scaled.str();
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = s.substr(0, s.size() - digits);
    if (digits) out += "." + s.substr(s.size() - digits);
    bool all_zero = scaled == 0;
    return (neg && !all_zero ? "-" : "") + out;
}

} // namespace

std::string decimal_truncated(const Rational& r, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scaled = num * ipow(10, digits) / den;
    return format_scaled(scaled, neg, digits);
}

std::string decimal_rounded(const Rational& r, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scaled = (2 * num * ipow(10, digits) + den) / (2 * den);
    return format_scaled(scaled, neg, digits);
}

} // namespace rankdens
