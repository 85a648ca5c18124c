#pragma once

#include "rankdens/gf.hpp"
#include "rankdens/grassmannian.hpp"
#include "rankdens/matrix.hpp"
#include "rankdens/numeric.hpp"
#include "rankdens/qcomb.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rankdens {

/// An F_q-subspace of n x m matrices, stored as the RREF basis of the
/// row-major flattened matrices.
class MatrixCode {
public:
    MatrixCode() = default;
    /// Span of the given n x m matrices; throws if the span is zero.
    static MatrixCode span(const Field& f, unsigned n, unsigned m, const std::vector<Matrix>& gens);
    /// Span of the rows of a (k x nm) matrix of flattened codewords.
    static MatrixCode from_rows(const Field& f, unsigned n, unsigned m, const Matrix& rows);

    const Field& field() const { return f_; }
    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    unsigned dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }

    std::vector<Matrix> basis_matrices() const;
    bool contains(const Matrix& M) const;

    friend bool operator==(const MatrixCode& a, const MatrixCode& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.space_ == b.space_;
    }
    friend bool operator<(const MatrixCode& a, const MatrixCode& b) { return a.space_ < b.space_; }

private:
    Field f_;
    unsigned n_ = 0, m_ = 0;
    Subspace space_;
};

/// Smallest rank among the nonzero F_q-combinations of `gens`, each an n x m
/// matrix flattened row-major over `entry`. The coefficient field `coef` must
/// sit inside `entry` with the same element encoding (entry may equal coef).
/// Codewords are visited projectively: the first nonzero coefficient is 1.
/// Returns early with a value below `stop_below` as soon as one is seen.
unsigned span_min_rank(const Field& coef, const Field& entry, unsigned n, unsigned m,
                       const std::vector<std::vector<Elem>>& gens, unsigned stop_below = 0);

/// Rank of an n x m matrix given flat over `f`.
unsigned flat_rank(const Field& f, unsigned n, unsigned m, const std::vector<Elem>& flat);

unsigned min_distance(const MatrixCode& C);
bool is_mrd(const MatrixCode& C);

/// Grassmannian of F_q^N after a budget check on its size.
Grassmannian enumerate_subspaces(unsigned N, unsigned k, const Field& f, const Budget& budget);

/// Number of k-dimensional subspaces V of F_q^D whose image under the ambient
/// basis (D flattened n x m matrices over `entry`) has minimum rank >= d.
/// An empty ambient means the standard basis of F_q^(n x m).
BigInt count_codes_min_rank(const Field& coef, const Field& entry, unsigned n, unsigned m,
                            const std::vector<std::vector<Elem>>& ambient, unsigned k, unsigned d,
                            const Budget& budget, unsigned jobs);

struct DensityResult {
    unsigned q = 0, n = 0, m = 0, k = 0, d = 0;
    BigInt count = 0;
    BigInt total = 0;
    Rational density = 0;
    std::string method;
    std::string kind; // empty for unrestricted codes
    double elapsed_ms = 0;

    nlohmann::ordered_json to_json(bool with_time = true) const;
};

DensityResult density_bruteforce(unsigned n, unsigned m, unsigned k, unsigned d, unsigned q,
                                 const Budget& budget, unsigned jobs = 1);

/// Number of m x m matrices M with det(lambda I + M) != 0 for every lambda in F_q.
BigInt spectrum_free_count(unsigned m, unsigned q, const Budget& budget);

struct HejarCheck {
    Rational density;  // brute-force density of 2 x m codes, dim m, distance 2
    BigInt lhs;        // density * qbinom(2m, m)
    BigInt rhs;        // brute-force spectrum-free count
    bool holds = false;
};
HejarCheck hejar_identity_check(unsigned m, unsigned q, const Budget& budget, unsigned jobs = 1);

/// Closed form of the density of 3 x 3 codes of dimension 3 and distance 3.
Rational density_3x3_formula(const BigInt& q);

struct MrdLowerBound {
    Rational count;
    Rational density;
};
/// Lower bound on the number of full-rank MRD codes in F_q^(n x n) from the
/// generalized twisted fields and their automorphism groups.
MrdLowerBound mrd_lowerbound_formula(unsigned n, const BigInt& q);

/// Number of prime factors of n counted with multiplicity.
unsigned gamma_factors(unsigned n);
/// q = 2 lower bound from commutative semifields with trivial automorphism
/// group; n must be composite and not a power of 3.
Rational kantor_lowerbound(unsigned n);

struct MinftyBound {
    Certified first;  // 1 / pi(q)^(q(d-1)(n-d+1)+1)
    Certified second; // 1 / (qbinom(n,d-1)(pi(q)-1)+1)
    Certified min;
};
MinftyBound minfty_bound(unsigned n, unsigned d, unsigned q, double eps = 1e-9);

/// The q -> infinity estimates for n x m codes of minimum distance d:
/// the upper exponent for MRD codes, and for square full-rank codes the
/// lower-bound exponent and, when n is prime, the exact leading constant.
std::vector<AsymptoticEstimate> asymptotic_constants(unsigned n, unsigned d, unsigned m);

} // namespace rankdens
