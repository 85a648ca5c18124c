#pragma once

#include "rankdens/gf.hpp"
#include "rankdens/matrix.hpp"
#include "rankdens/numeric.hpp"

#include <set>
#include <vector>

namespace rankdens {

using Point = std::vector<Elem>;

/// Normalize so the first nonzero coordinate is 1. Throws on the zero vector.
Point canonical_point(const Field& f, Point v);

/// All points of PG(N-1, q) in increasing canonical order.
std::vector<Point> projective_points(const Field& f, unsigned N);

/// A non-empty set of 1-dimensional subspaces of F_q^N.
class PointSet {
public:
    /// Vectors are normalized; zero vectors and repeated points are rejected.
    PointSet(Field f, unsigned N, const std::vector<Point>& vectors);

    const Field& field() const { return f_; }
    unsigned N() const { return N_; }
    std::size_t size() const { return pts_.size(); }
    /// Dimension of the span.
    unsigned dim() const { return dim_; }
    const std::set<Point>& points() const { return pts_; }

private:
    Field f_;
    unsigned N_ = 0;
    std::set<Point> pts_;
    unsigned dim_ = 0;
};

/// True iff no point of P lies in V.
bool distinguishes(const Subspace& V, const PointSet& P);

/// Fraction of the k-dimensional subspaces of F_q^N that distinguish P.
Rational delta_bruteforce(unsigned k, const PointSet& P, const Budget& budget, unsigned jobs = 1);

/// Nonzero matrices of rank <= r in F_q^(n x m), one per line, as flat vectors.
PointSet rank_pointset(const Field& f, unsigned n, unsigned m, unsigned r);

/// Mean of delta over all point sets of size l:
/// C((q^N - q^k)/(q-1), l) / C((q^N - 1)/(q-1), l).
Rational avg_density_formula(unsigned N, unsigned k, const BigInt& l, const BigInt& q);

/// Limits of the average density.
/// q large with l ~ q^s:            exp(-q^(k+s-N))
double avg_limit_q_large(unsigned N, unsigned k, unsigned s, double q);
/// m large with l ~ l' q^(m r), N = mn, k = mk':  exp(-l' q^(m(k'+r-n)))
double avg_limit_m_large(unsigned n, unsigned kp, unsigned r, double lp, double q, unsigned m);
/// Average density for the rank ball of radius d-1 and MRD dimension, q large.
double avg_rankball_limit_q_large(unsigned n, unsigned d, double q);
/// Same, m large: exp(-[n, d-1]_q / (q-1)).
double avg_rankball_limit_m_large(unsigned n, unsigned d, unsigned q);

/// Number of point sets of size l spanning a rho-dimensional space that a
/// fixed s-dimensional subspace of F_q^N distinguishes.
BigInt lambda(unsigned N, unsigned s, const BigInt& l, unsigned rho, const BigInt& q);

/// Exhaustive mean of delta over all point sets of size l.
Rational avg_density_bruteforce(unsigned N, unsigned k, unsigned l, unsigned q, const Budget& budget);

/// lambda by running over every l-subset of points; V = <e_1, ..., e_s>.
BigInt lambda_bruteforce(unsigned N, unsigned s, unsigned l, unsigned rho, unsigned q, const Budget& budget);

/// Mean of delta over point sets of size l and span dimension rho.
Rational avg_density_rank_formula(unsigned N, unsigned k, const BigInt& l, unsigned rho, const BigInt& q);

/// Hyperplane density for i points on a line (kind 1, 2 <= i <= q+1) or for
/// i independent points (kind 2, i <= N-1).
Rational prop52_formula(unsigned N, unsigned i, const BigInt& q, int kind);

/// Block code spanned by the rows of an N x l generator of rank N.
struct BlockCode {
    Field field;
    Matrix generator;

    unsigned dim() const { return generator.rows; }
    unsigned length() const { return generator.cols; }
};

/// Generator whose columns are the points of P in canonical order.
BlockCode code_from_pointset(const PointSet& P);
/// W_0..W_l, by running over all q^N information vectors.
std::vector<BigInt> weight_distribution(const BlockCode& C, const Budget& budget);

/// Hyperplane density for an arc of size l in F_q^N.
Rational mds_arc_density(unsigned N, const BigInt& l, const BigInt& q);
/// First l points of {(1, t, ..., t^(N-1))} followed by (0, ..., 0, 1).
PointSet moment_curve_arc(const Field& f, unsigned N, unsigned l);

/// Hyperplane density for an arc of size l-1 in F_q^(N-1) extended by e_N.
Rational arc_plus_point_density(unsigned N, const BigInt& l, const BigInt& q);
/// Closed form of arc_plus_point_density - mds_arc_density.
Rational arc_plus_point_gap(unsigned N, const BigInt& l, const BigInt& q);
/// The point set behind arc_plus_point_density.
PointSet arc_plus_point(const Field& f, unsigned N, unsigned l);

struct CriticalRow {
    unsigned rho;
    Rational density;
};
/// (q, N, k, l) = (2, 10, 6, 31) for rho = 10 down to 5.
std::vector<CriticalRow> critical_example_rows();

} // namespace rankdens
