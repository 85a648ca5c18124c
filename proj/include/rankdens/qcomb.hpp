#pragma once

#include "rankdens/numeric.hpp"

#include <string>

namespace rankdens {

/// Gaussian binomial [i choose j]_q; zero when j < 0 or j > i.
BigInt qbinom(long i, long j, const BigInt& q);
BigInt gl_order(unsigned a, const BigInt& q);

/// Number of n x m matrices of rank exactly i.
BigInt rank_count_full(unsigned n, unsigned m, unsigned i, const BigInt& q);
/// Number of n x m matrices of rank at most r (n <= m).
BigInt ball_size(unsigned n, unsigned m, unsigned r, const BigInt& q);
/// Number of projective points spanned by nonzero matrices of rank at most r.
BigInt pointset_size(unsigned n, unsigned m, unsigned r, const BigInt& q);

/// prod_{i=1}^{n} q^i / (q^i - 1)
Rational pi_q(const BigInt& q, unsigned n);
/// The infinite product, to within eps.
Certified pi_q_infinite(unsigned q, double eps);

/// sum_{i=0}^{m} (-1)^i / i!
Rational alt_exp_sum(unsigned m);

struct InequalityCheck {
    bool holds = false;      // certified lower bound of the margin is positive
    bool conclusive = false; // margin exceeds the truncation error
    double margin = 0;       // lower bound for log pi(q) - 1/(q-1)
    double error = 0;        // truncation plus rounding bound
    unsigned terms = 0;
};

/// prod_{i>=1} (1 - q^-i)^(q+1) < exp(-(q+1)/(q-1)), checked in log form
/// using the first `terms` factors.
InequalityCheck comparison_inequality_check(unsigned q, unsigned terms);

/// c * base^exponent. The constant may be exact or numeric, never both.
struct AsymptoticEstimate {
    std::string label;
    bool exact_constant = true;
    Rational constant = 1;
    double constant_float = 0;
    std::string base = "q"; // "q" or "e"
    Rational exponent = 0;

    double constant_value() const { return exact_constant ? to_double(constant) : constant_float; }
    double evaluate(double q) const;
    std::string describe() const;
};

} // namespace rankdens
