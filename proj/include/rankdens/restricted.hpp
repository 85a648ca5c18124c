#pragma once

#include "rankdens/codes.hpp"
#include "rankdens/gf.hpp"
#include "rankdens/numeric.hpp"
#include "rankdens/qcomb.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankdens {

enum class Kind { symmetric, alternating, hermitian, full };

std::string kind_name(Kind k);
/// Accepts "symmetric", "alternating", "hermitian", "full"; throws otherwise.
Kind parse_kind(const std::string& s);

/// F_q-dimension of the n x n ambient.
unsigned ambient_dim(Kind k, unsigned n);

/// Field holding the matrix entries: F_{q^2} for Hermitian matrices, F_q otherwise.
Field entry_field(Kind k, unsigned q);

/// F_q-basis of the ambient as flat n x n matrices over entry_field.
/// symmetric:   E_ii, then E_ij + E_ji for i < j (row-major)
/// alternating: E_ij - E_ji for i < j
/// hermitian:   E_ii, then E_ij + E_ji and w E_ij + w^q E_ji for i < j, w = t
/// full:        E_ij row-major
std::vector<std::vector<Elem>> ambient_basis(Kind k, unsigned n, unsigned q);

/// Membership predicate for a flat n x n matrix over entry_field.
bool in_ambient(Kind k, unsigned n, unsigned q, const std::vector<Elem>& flat);

/// Number of rank-i matrices in the ambient. The Hermitian count uses the
/// sign variant prod (q^j + (-1)^j), which matches enumeration.
BigInt rank_count(Kind k, unsigned n, unsigned i, const BigInt& q);
/// Hermitian count with the factor prod (q^j - (-1)^j) instead.
BigInt rank_count_hermitian_printed(unsigned n, unsigned i, const BigInt& q);

/// Count of each rank 0..n over the whole ambient, by enumeration.
std::vector<BigInt> rank_strata_bruteforce(Kind k, unsigned n, unsigned q, const Budget& budget);

/// Largest dimension of a code in the ambient with minimum distance d.
unsigned dim_bound(Kind k, unsigned n, unsigned d);

DensityResult restricted_density_bruteforce(Kind k, unsigned n, unsigned dim, unsigned d, unsigned q,
                                            const Budget& budget, unsigned jobs = 1);

/// Leading exponent of q in the size of the rank-r ball of the ambient.
long ball_asymptotic_exponent(Kind k, unsigned n, unsigned r);

struct Sparseness {
    long exponent = 0;  // density is O(q^exponent)
    long threshold = 0; // limit is 1 below, 0 above
    std::optional<int> limit;
    AsymptoticEstimate estimate;
};
/// The O(q^e) bound for q -> infinity and the 0/1 classification of k.
/// For Hermitian ambients the exponent is dim - k + 1 - ball exponent(d-1).
Sparseness sparseness_exponent(Kind k, unsigned n, unsigned dim, unsigned d);
/// Hermitian exponent with (d-1)(2n+d-1) in place of the ball exponent.
long hermitian_sparseness_exponent_printed(unsigned n, unsigned dim, unsigned d);

/// Density of 2-dimensional n x n codes of minimum distance n.
/// s is the spectrum-free count; it is enumerated when omitted.
Rational density_2dim_formula(unsigned n, unsigned q, std::optional<BigInt> s = std::nullopt,
                              const Budget& budget = default_budget());

/// delta(r x n, n, r) / delta(n x n, r, n) in closed form.
Rational tensor_ratio(unsigned r, unsigned n, const BigInt& q);

} // namespace rankdens
