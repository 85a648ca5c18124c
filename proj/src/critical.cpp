#include "rankdens/critical.hpp"

#include "rankdens/codes.hpp"
#include "rankdens/grassmannian.hpp"
#include "rankdens/parallel.hpp"
#include "rankdens/qcomb.hpp"

#include <cmath>
#include <stdexcept>

namespace rankdens {

Point canonical_point(const Field& f, Point v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        Elem s = f.inv(v[i]);
        for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(s, v[j]);
        return v;
    }
    throw std::invalid_argument("the zero vector is not a point");
}

std::vector<Point> projective_points(const Field& f, unsigned N) {
    // leading 1 at position p, anything after it
    std::vector<Point> out;
    const unsigned q = f.q();
    for (unsigned p = N; p-- > 0;) {
        std::uint64_t tail = ipow64(q, N - 1 - p);
        for (std::uint64_t t = 0; t < tail; ++t) {
            Point v(N, 0);
            v[p] = 1;
            std::uint64_t x = t;
            for (unsigned j = N; j-- > p + 1;) {
                v[j] = static_cast<Elem>(x % q);
                x /= q;
            }
            out.push_back(v);
        }
    }
    return out;
}

PointSet::PointSet(Field f, unsigned N, const std::vector<Point>& vectors) : f_(std::move(f)), N_(N) {
    if (vectors.empty()) throw std::invalid_argument("point set must be non-empty");
    for (const auto& v : vectors) {
        if (v.size() != N) throw std::invalid_argument("point has the wrong length");
        if (!pts_.insert(canonical_point(f_, v)).second) throw std::invalid_argument("repeated point");
    }
    Matrix M(static_cast<unsigned>(pts_.size()), N);
    unsigned r = 0;
    for (const auto& p : pts_) {
        std::copy(p.begin(), p.end(), M.a.begin() + std::ptrdiff_t(r) * N);
        ++r;
    }
    dim_ = rank(f_, M);
}

namespace {

// V^perp as rows, so p lies in V iff H p = 0
bool avoids_all(const Field& f, const Matrix& H, const PointSet& P) {
    for (const auto& p : P.points()) {
        bool inside = true;
        for (unsigned r = 0; r < H.rows && inside; ++r) {
            Elem s = 0;
            for (unsigned c = 0; c < H.cols; ++c)
                if (H(r, c) && p[c]) s = f.add(s, f.mul(H(r, c), p[c]));
            inside = s == 0;
        }
        if (inside) return false;
    }
    return true;
}

} // namespace

bool distinguishes(const Subspace& V, const PointSet& P) {
    if (V.basis.cols != P.N() && V.basis.rows != 0) throw std::invalid_argument("dimension mismatch");
    if (V.dim() == 0) return true;
    for (const auto& p : P.points())
        if (V.contains(P.field(), p)) return false;
    return true;
}

Rational delta_bruteforce(unsigned k, const PointSet& P, const Budget& budget, unsigned jobs) {
    const unsigned N = P.N();
    if (k > N) throw std::invalid_argument("k exceeds the ambient dimension");
    if (k == 0) return 1;
    if (k == N) return 0;
    const Field& f = P.field();
    Grassmannian G = enumerate_subspaces(N, k, f, budget);
    auto parts = run_chunks<std::uint64_t>(G.size(), jobs, [&](Range r) {
        std::uint64_t cnt = 0;
        G.for_each(r.begin, r.end, [&](const Matrix& V) {
            if (avoids_all(f, nullspace(f, V), P)) ++cnt;
        });
        return cnt;
    });
    BigInt hits = 0;
    for (auto c : parts) hits += c;
    return Rational(hits, BigInt(G.size()));
}

PointSet rank_pointset(const Field& f, unsigned n, unsigned m, unsigned r) {
    if (r == 0) throw std::invalid_argument("radius must be positive");
    std::vector<Point> pts;
    for (const auto& p : projective_points(f, n * m))
        if (flat_rank(f, n, m, p) <= r) pts.push_back(p);
    return {f, n * m, pts};
}

Rational avg_density_formula(unsigned N, unsigned k, const BigInt& l, const BigInt& q) {
    if (k > N) throw std::invalid_argument("k exceeds N");
    BigInt all = (ipow(q, N) - 1) / (q - 1);
    if (l < 1 || l > all) throw std::invalid_argument("l out of range");
    BigInt avoid = (ipow(q, N) - ipow(q, k)) / (q - 1);
    long ll = static_cast<long>(l);
    return Rational(binomial(avoid, ll), binomial(all, ll));
}

double avg_limit_q_large(unsigned N, unsigned k, unsigned s, double q) {
    return std::exp(-std::pow(q, double(k) + s - N));
}

double avg_limit_m_large(unsigned n, unsigned kp, unsigned r, double lp, double q, unsigned m) {
    return std::exp(-lp * std::pow(q, double(m) * (double(kp) + r - n)));
}

double avg_rankball_limit_q_large(unsigned n, unsigned d, double q) {
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    long e = long(d) * (long(n) - d + 2) - n - 2;
    return std::exp(-std::pow(q, double(e)));
}

double avg_rankball_limit_m_large(unsigned n, unsigned d, unsigned q) {
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    return std::exp(-to_double(Rational(qbinom(n, d - 1, q), BigInt(q - 1))));
}

BigInt lambda(unsigned N, unsigned s, const BigInt& l, unsigned rho, const BigInt& q) {
    if (rho < 2 || rho > N) throw std::invalid_argument("need 2 <= rho <= N");
    if (s > N) throw std::invalid_argument("need s <= N");
    if (l < rho || l > (ipow(q, rho) - 1) / (q - 1)) throw std::invalid_argument("need rho <= l <= [rho, 1]_q");
    const long ll = static_cast<long>(l);
    BigInt total = 0;
    for (unsigned i = 0; i <= rho; ++i) {
        BigInt inner = 0;
        // t > i is killed by [N-s, i-t]_q = 0
        for (unsigned t = 0; t <= std::min(s, i); ++t) {
            BigInt pts = (ipow(q, i) - ipow(q, t)) / (q - 1);
            BigInt c = binomial(pts, ll);
            if (c == 0) continue;
            inner += c * qbinom(s, t, q) * qbinom(long(N) - s, long(i) - t, q) * ipow(q, (s - t) * (i - t));
        }
        unsigned e = rho - i;
        BigInt term = ipow(q, e ? e * (e - 1) / 2 : 0) * qbinom(long(N) - i, e, q) * inner;
        if (e % 2) total -= term;
        else total += term;
    }
    return total;
}

namespace {

// calls fn on every l-subset of {0, ..., P-1}, lexicographically
template <class Fn>
void each_subset(unsigned P, unsigned l, Fn fn) {
    if (l > P) return;
    std::vector<unsigned> s(l);
    for (unsigned i = 0; i < l; ++i) s[i] = i;
    for (;;) {
        fn(s);
        int i = int(l) - 1;
        while (i >= 0 && s[i] == P - l + unsigned(i)) --i;
        if (i < 0) return;
        ++s[i];
        for (unsigned j = unsigned(i) + 1; j < l; ++j) s[j] = s[j - 1] + 1;
    }
}

} // namespace

Rational avg_density_bruteforce(unsigned N, unsigned k, unsigned l, unsigned q, const Budget& budget) {
    Field f = Field::of_order(q);
    auto pts = projective_points(f, N);
    const unsigned P = static_cast<unsigned>(pts.size());
    if (l < 1 || l > P) throw std::invalid_argument("l out of range");
    if (k > N) throw std::invalid_argument("k exceeds N");
    Grassmannian G = enumerate_subspaces(N, k, f, budget);
    budget.require(binomial(P, l) * G.size(), "point-set sweep");
    // which points each subspace contains
    std::vector<std::vector<bool>> inside;
    if (k == 0) inside.assign(1, std::vector<bool>(P, false));
    else
        G.for_each([&](const Matrix& V) {
            Matrix H = nullspace(f, V);
            std::vector<bool> in(P);
            for (unsigned i = 0; i < P; ++i) {
                bool zero = true;
                for (unsigned r = 0; r < H.rows && zero; ++r) {
                    Elem s = 0;
                    for (unsigned c = 0; c < N; ++c) s = f.add(s, f.mul(H(r, c), pts[i][c]));
                    zero = s == 0;
                }
                in[i] = zero;
            }
            inside.push_back(in);
        });
    BigInt hits = 0, sets = 0;
    each_subset(P, l, [&](const std::vector<unsigned>& S) {
        ++sets;
        for (const auto& in : inside) {
            bool ok = true;
            for (auto p : S) ok = ok && !in[p];
            if (ok) ++hits;
        }
    });
    return Rational(hits, sets * inside.size());
}

BigInt lambda_bruteforce(unsigned N, unsigned s, unsigned l, unsigned rho, unsigned q, const Budget& budget) {
    if (s > N) throw std::invalid_argument("need s <= N");
    Field f = Field::of_order(q);
    auto pts = projective_points(f, N);
    const unsigned P = static_cast<unsigned>(pts.size());
    budget.require(binomial(P, l), "point-set sweep");
    BigInt n = 0;
    Matrix M(l, N);
    each_subset(P, l, [&](const std::vector<unsigned>& S) {
        for (auto p : S) {
            bool in_v = true;
            for (unsigned c = s; c < N; ++c) in_v = in_v && pts[p][c] == 0;
            if (in_v) return;
        }
        for (unsigned r = 0; r < l; ++r) std::copy(pts[S[r]].begin(), pts[S[r]].end(), M.a.begin() + std::ptrdiff_t(r) * N);
        if (rank(f, M) == rho) ++n;
    });
    return n;
}

Rational avg_density_rank_formula(unsigned N, unsigned k, const BigInt& l, unsigned rho, const BigInt& q) {
    if (k > N) throw std::invalid_argument("k exceeds N");
    BigInt den = lambda(N, 0, l, rho, q);
    if (den == 0) throw std::invalid_argument("no point sets with these parameters");
    return Rational(lambda(N, k, l, rho, q), den);
}

Rational prop52_formula(unsigned N, unsigned i, const BigInt& q, int kind) {
    BigInt den = ipow(q, N) - 1;
    if (kind == 1) {
        if (N < 2 || i < 2 || i > q + 1) throw std::invalid_argument("need N >= 2 and 2 <= i <= q+1");
        return Rational((q + 1 - i) * (q - 1) * ipow(q, N - 2), den);
    }
    if (kind == 2) {
        if (i < 2 || i > N - 1) throw std::invalid_argument("need 2 <= i <= N-1");
        return Rational(ipow(q - 1, i) * ipow(q, N - i), den);
    }
    throw std::invalid_argument("kind must be 1 or 2");
}

BlockCode code_from_pointset(const PointSet& P) {
    if (P.dim() != P.N()) throw std::invalid_argument("point set does not span");
    Matrix G(P.N(), static_cast<unsigned>(P.size()));
    unsigned c = 0;
    for (const auto& p : P.points()) {
        for (unsigned r = 0; r < P.N(); ++r) G(r, c) = p[r];
        ++c;
    }
    return {P.field(), G};
}

std::vector<BigInt> weight_distribution(const BlockCode& C, const Budget& budget) {
    const Field& f = C.field;
    const unsigned N = C.dim(), l = C.length(), q = f.q();
    budget.require(ipow(q, N), "weight enumeration");
    std::vector<std::uint64_t> w(l + 1, 0);
    std::uint64_t total = ipow64(q, N);
    std::vector<Elem> x(N);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t v = t;
        for (auto& e : x) {
            e = static_cast<Elem>(v % q);
            v /= q;
        }
        unsigned wt = 0;
        for (unsigned c = 0; c < l; ++c) {
            Elem s = 0;
            for (unsigned r = 0; r < N; ++r)
                if (x[r]) s = f.add(s, f.mul(x[r], C.generator(r, c)));
            wt += s != 0;
        }
        ++w[wt];
    }
    return {w.begin(), w.end()};
}

Rational mds_arc_density(unsigned N, const BigInt& l, const BigInt& q) {
    if (N < 2 || l < N) throw std::invalid_argument("need 2 <= N <= l");
    BigInt s = 0;
    for (unsigned j = 0; j < N; ++j) {
        BigInt t = binomial(l - 1, j) * ipow(q, N - j - 1);
        if (j % 2) s -= t;
        else s += t;
    }
    return Rational((q - 1) * s, ipow(q, N) - 1);
}

PointSet moment_curve_arc(const Field& f, unsigned N, unsigned l) {
    if (N < 2) throw std::invalid_argument("need N >= 2");
    if (l > f.q() + 1) throw std::invalid_argument("moment curve has only q+1 points");
    std::vector<Point> pts;
    for (Elem t = 0; t < f.q() && pts.size() < l; ++t) {
        Point v(N);
        v[0] = 1;
        for (unsigned j = 1; j < N; ++j) v[j] = f.mul(v[j - 1], t);
        pts.push_back(v);
    }
    if (pts.size() < l) {
        Point v(N, 0);
        v[N - 1] = 1;
        pts.push_back(v);
    }
    return {f, N, pts};
}

Rational arc_plus_point_density(unsigned N, const BigInt& l, const BigInt& q) {
    if (N < 2 || l < 2 || l > q - 1) throw std::invalid_argument("need N >= 2 and 2 <= l <= q-1");
    BigInt s = 0;
    for (unsigned j = 0; j + 2 <= N; ++j) {
        BigInt t = binomial(l - 2, j) * ipow(q, N - j - 2);
        if (j % 2) s -= t;
        else s += t;
    }
    return Rational((q - 1) * (q - 1) * s, ipow(q, N) - 1);
}

Rational arc_plus_point_gap(unsigned N, const BigInt& l, const BigInt& q) {
    if (N < 2 || l < 2) throw std::invalid_argument("need N >= 2 and l >= 2");
    BigInt c = binomial(l - 2, N - 1);
    return Rational((N % 2 ? -c : c) * (q - 1), ipow(q, N) - 1);
}

PointSet arc_plus_point(const Field& f, unsigned N, unsigned l) {
    if (N < 3 || l < 2) throw std::invalid_argument("need N >= 3 and l >= 2");
    PointSet arc = moment_curve_arc(f, N - 1, l - 1);
    std::vector<Point> pts;
    for (auto p : arc.points()) {
        p.push_back(0);
        pts.push_back(p);
    }
    Point e(N, 0);
    e[N - 1] = 1;
    pts.push_back(e);
    return {f, N, pts};
}

std::vector<CriticalRow> critical_example_rows() {
    std::vector<CriticalRow> out;
    for (unsigned rho = 10; rho >= 5; --rho) out.push_back({rho, avg_density_rank_formula(10, 6, 31, rho, 2)});
    return out;
}

} // namespace rankdens
