#include "rankdens/qcomb.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rankdens {

BigInt qbinom(long i, long j, const BigInt& q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (j < 0 || i < 0 || j > i) return 0;
    if (j > i - j) j = i - j;
    BigInt r = 1;
    for (long t = 0; t < j; ++t) {
        r *= ipow(q, static_cast<unsigned>(i - t)) - 1;
        BigInt d = ipow(q, static_cast<unsigned>(t + 1)) - 1;
        if (r % d != 0) throw std::logic_error("q-binomial lost integrality");
        r /= d;
    }
    return r;
}

BigInt gl_order(unsigned a, const BigInt& q) {
    BigInt qa = ipow(q, a), r = 1, qi = 1;
    for (unsigned i = 0; i < a; ++i) {
        r *= qa - qi;
        qi *= q;
    }
    return r;
}

BigInt rank_count_full(unsigned n, unsigned m, unsigned i, const BigInt& q) {
    if (i > n || i > m) return 0;
    BigInt prod = 1, qm = ipow(q, m), qj = 1;
    for (unsigned j = 0; j < i; ++j) {
        prod *= qm - qj;
        qj *= q;
    }
    return qbinom(n, i, q) * prod;
}

BigInt ball_size(unsigned n, unsigned m, unsigned r, const BigInt& q) {
    if (n > m) throw std::invalid_argument("ball_size expects n <= m");
    if (r > n) throw std::invalid_argument("radius exceeds n");
    BigInt s = 0;
    for (unsigned i = 0; i <= r; ++i) s += rank_count_full(n, m, i, q);
    return s;
}

BigInt pointset_size(unsigned n, unsigned m, unsigned r, const BigInt& q) {
    if (r == 0) throw std::invalid_argument("point set radius must be positive");
    return (ball_size(n, m, r, q) - 1) / (q - 1);
}

Rational pi_q(const BigInt& q, unsigned n) {
    Rational r = 1;
    for (unsigned i = 1; i <= n; ++i) {
        BigInt qi = ipow(q, i);
        r *= Rational(qi, qi - 1);
    }
    return r;
}

Certified pi_q_infinite(unsigned q, double eps) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (!(eps > 0)) throw std::invalid_argument("tolerance must be positive");
    double log_p = 0;
    for (unsigned n = 1; n < 4000; ++n) {
        log_p += -std::log1p(-std::pow(double(q), -double(n)));
        // tail of sum_{i>n} -log(1 - q^-i) is at most 2 q^-(n+1) / (1 - 1/q)
        double tail = 2 * std::pow(double(q), -double(n + 1)) / (1 - 1.0 / q);
        double lo = std::exp(log_p);
        double hi = std::exp(log_p + tail);
        double slack = 1e-14 * hi;
        if (hi - lo + 2 * slack < eps) return {(lo + hi) / 2, (hi - lo) / 2 + slack};
    }
    throw std::runtime_error("pi_q_infinite did not reach the requested tolerance");
}

Rational alt_exp_sum(unsigned m) {
    Rational s = 0;
    BigInt fact = 1;
    for (unsigned i = 0; i <= m; ++i) {
        if (i) fact *= i;
        s += Rational(i % 2 ? -1 : 1, fact);
    }
    return s;
}

InequalityCheck comparison_inequality_check(unsigned q, unsigned terms) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (terms == 0) throw std::invalid_argument("need at least one term");
    double s = 0;
    for (unsigned i = 1; i <= terms; ++i) s += -std::log1p(-std::pow(double(q), -double(i)));
    InequalityCheck c;
    c.terms = terms;
    // truncation only increases the sum, so s is a lower bound of log pi(q)
    c.margin = s - 1.0 / (q - 1);
    double rounding = 1e-15 * terms;
    double tail = 2 * std::pow(double(q), -double(terms + 1)) / (1 - 1.0 / q);
    c.error = tail + rounding;
    c.holds = c.margin > rounding;
    c.conclusive = c.margin > c.error;
    return c;
}

double AsymptoticEstimate::evaluate(double q) const {
    double b = base == "e" ? std::exp(1.0) : q;
    return constant_value() * std::pow(b, to_double(exponent));
}

std::string AsymptoticEstimate::describe() const {
    std::ostringstream os;
    if (!label.empty()) os << label << ": ";
    if (exact_constant)
        os << to_string(constant);
    else
        os << constant_float;
    os << " * " << base << "^(" << to_string(exponent) << ")";
    return os.str();
}

} // namespace rankdens
