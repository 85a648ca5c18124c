#include <doctest.h>

#include "oracles.hpp"
#include "rankdens/codes.hpp"
#include "rankdens/critical.hpp"
#include "rankdens/qcomb.hpp"

#include <cmath>
#include <random>

using namespace rankdens;

namespace {

Rational hyperplane_oracle(const PointSet& P) {
    // count nonzero functionals up to scaling that vanish on no point
    const Field& f = P.field();
    oracle::Geometry g(f, P.N());
    BigInt good = 0;
    for (const auto& x : g.pts) {
        bool ok = true;
        for (const auto& p : P.points()) {
            Elem s = 0;
            for (unsigned i = 0; i < P.N(); ++i) s = f.add(s, f.mul(x[i], p[i]));
            ok = ok && s != 0;
        }
        if (ok) ++good;
    }
    return Rational(good, BigInt(g.pts.size()));
}

} // namespace

TEST_CASE("points and distinguishing") {
    Field f = Field::of_order(2);
    auto pts = projective_points(f, 2);
    CHECK(pts.size() == 3);
    Subspace V = Subspace::span(f, Matrix::from_flat(1, 2, {1, 1}));
    PointSet other(f, 2, {{1, 0}, {0, 1}});
    CHECK(distinguishes(V, other));
    PointSet inside(f, 2, {{1, 1}});
    CHECK_FALSE(distinguishes(V, inside));
    CHECK_THROWS_AS(PointSet(f, 2, {{1, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(f, 2, {{0, 0}}), std::invalid_argument);
    Field f3 = Field::of_order(3);
    PointSet scaled(f3, 2, {{2, 1}});
    CHECK(*scaled.points().begin() == Point{1, 2});
    CHECK(projective_points(f3, 3).size() == 13);
}

TEST_CASE("delta by brute force") {
    Field f = Field::of_order(2);
    PointSet one(f, 2, {{1, 0}});
    CHECK(delta_bruteforce(1, one, Budget::unlimited()) == Rational(2, 3));
    PointSet all(f, 3, projective_points(f, 3));
    for (unsigned k = 1; k <= 3; ++k) CHECK(delta_bruteforce(k, all, Budget::unlimited()) == 0);
    std::mt19937_64 rng(3);
    for (unsigned q : {2u, 3u}) {
        Field F = Field::of_order(q);
        auto pts = projective_points(F, 3);
        for (int it = 0; it < 10; ++it) {
            std::shuffle(pts.begin(), pts.end(), rng);
            PointSet P(F, 3, {pts.begin(), pts.begin() + 1 + it % 4});
            CHECK(delta_bruteforce(2, P, Budget::unlimited(), 3) == hyperplane_oracle(P));
        }
    }
}

TEST_CASE("rank point sets reproduce the code densities") {
    Field f = Field::of_order(2);
    for (unsigned d = 2; d <= 2; ++d) {
        auto P = rank_pointset(f, 2, 2, d - 1);
        CHECK(P.size() == 9);
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(delta_bruteforce(k, P, Budget::unlimited()) ==
                  density_bruteforce(2, 2, k, d, 2, Budget::unlimited()).density);
    }
    Field f3 = Field::of_order(3);
    auto P3 = rank_pointset(f3, 2, 2, 1);
    for (unsigned k = 1; k <= 2; ++k)
        CHECK(delta_bruteforce(k, P3, Budget::unlimited()) == density_bruteforce(2, 2, k, 2, 3, Budget::unlimited()).density);
}

TEST_CASE("average density equals the exhaustive mean") {
    CHECK(avg_density_formula(2, 1, 1, 2) == Rational(2, 3));
    // a single point avoids a pair in 5 of 7 cases, whatever the pair
    CHECK(avg_density_formula(3, 1, 2, 2) == Rational(5, 7));
    CHECK(avg_density_formula(3, 2, 2, 2) == Rational(6, 21));
    CHECK(avg_density_formula(3, 2, 5, 2) == 0);
    CHECK_THROWS_AS(avg_density_formula(2, 1, 4, 2), std::invalid_argument);
    for (unsigned q : {2u, 3u})
        for (unsigned N = 1; N <= 3; ++N) {
            oracle::Geometry g(Field::of_order(q), N);
            for (unsigned k = 0; k <= N; ++k)
                for (unsigned l = 1; l <= std::min<std::size_t>(6, g.pts.size()); ++l)
                    CHECK(avg_density_formula(N, k, l, q) == oracle::average_density(g, k, l));
        }
}

TEST_CASE("lambda counts distinguished point sets") {
    CHECK(lambda(2, 0, 2, 2, 2) == 3);
    CHECK(lambda(2, 1, 2, 2, 2) == 1);
    CHECK_THROWS_AS(lambda(3, 1, 2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda(3, 1, 4, 2, 2), std::invalid_argument);
    for (unsigned N = 2; N <= 3; ++N) {
        oracle::Geometry g(Field::of_order(2), N);
        for (unsigned rho = 2; rho <= N; ++rho)
            for (unsigned l = rho; l <= (1u << rho) - 1; ++l) {
                for (unsigned s = 0; s <= N; ++s) CHECK(lambda(N, s, l, rho, 2) == oracle::count_avoiding(g, s, l, rho));
            }
        // the s = 0 counts over all rho add up to every l-subset
        for (unsigned l = 2; l <= 3; ++l) {
            BigInt sum = 0;
            for (unsigned rho = 2; rho <= N; ++rho)
                if (l >= rho && l <= (1u << rho) - 1) sum += lambda(N, 0, l, rho, 2);
            CHECK(sum == binomial(g.pts.size(), l));
        }
    }
}

TEST_CASE("average over point sets of fixed span") {
    auto rows = critical_example_rows();
    REQUIRE(rows.size() == 6);
    const char* printed[] = {"0.1352", "0.1333", "0.1295", "0.1211", "0.1003", "0.0000"};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].rho == 10 - i);
        CHECK(decimal_truncated(rows[i].density, 4) == printed[i]);
        if (i + 1 < rows.size()) CHECK(rows[i].density >= rows[i + 1].density);
    }
    CHECK(rows[5].density == 0);
    // the printed digits are truncations; rounding would move four of them
    CHECK(decimal_rounded(rows[1].density, 4) == "0.1334");
    CHECK(avg_density_rank_formula(10, 6, 30, 5, 2) > 0);
}

TEST_CASE("hyperplanes and structured point sets") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Field f = Field::of_order(q);
        for (unsigned N = 2; N <= 3; ++N) {
            // i points on the line <e1, e2>
            std::vector<Point> line;
            line.push_back(Point(N, 0));
            line[0][1] = 1;
            for (Elem t = 0; t < q; ++t) {
                Point v(N, 0);
                v[0] = 1;
                v[1] = t;
                line.push_back(v);
            }
            for (unsigned i = 2; i <= q + 1; ++i) {
                PointSet P(f, N, {line.begin(), line.begin() + i});
                CHECK(delta_bruteforce(N - 1, P, Budget::unlimited()) == prop52_formula(N, i, q, 1));
            }
        }
        for (unsigned N = 3; N <= 4; ++N)
            for (unsigned i = 2; i <= N - 1; ++i) {
                std::vector<Point> basis;
                for (unsigned r = 0; r < i; ++r) {
                    Point v(N, 0);
                    v[r] = 1;
                    basis.push_back(v);
                }
                PointSet P(f, N, basis);
                CHECK(delta_bruteforce(N - 1, P, Budget::unlimited()) == prop52_formula(N, i, q, 2));
            }
    }
    CHECK(prop52_formula(3, 2, 2, 2) == Rational(2, 7));
    CHECK(prop52_formula(3, 3, 2, 1) == 0);
    for (unsigned q = 2; q <= 9; ++q)
        for (unsigned i = 3; i <= q + 1; ++i)
            for (unsigned N = i; N <= i + 2; ++N)
                CHECK(ipow(BigInt(q - 1), i) * ipow(BigInt(q), N - i) > BigInt(long(q) + 1 - long(i)) * (q - 1) * ipow(BigInt(q), N - 2));
}

TEST_CASE("block codes and hyperplanes") {
    Field f = Field::of_order(2);
    PointSet std3(f, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto W = weight_distribution(code_from_pointset(std3), Budget::unlimited());
    CHECK(W[3] == 1);
    CHECK(delta_bruteforce(2, std3, Budget::unlimited()) == Rational(1, 7));
    PointSet line(f, 2, projective_points(f, 2));
    CHECK(weight_distribution(code_from_pointset(line), Budget::unlimited())[3] == 0);
    CHECK_THROWS_AS(code_from_pointset(PointSet(f, 3, {{1, 0, 0}})), std::invalid_argument);

    std::mt19937_64 rng(21);
    int done = 0;
    for (int it = 0; done < 20; ++it) {
        unsigned q = it % 2 ? 3 : 2;
        unsigned N = 2 + it % 3;
        Field F = Field::of_order(q);
        auto pts = projective_points(F, N);
        std::shuffle(pts.begin(), pts.end(), rng);
        std::size_t l = N + rng() % (pts.size() - N + 1);
        PointSet P(F, N, {pts.begin(), pts.begin() + l});
        if (P.dim() != N) continue;
        auto w = weight_distribution(code_from_pointset(P), Budget::unlimited());
        BigInt sum = 0;
        for (const auto& x : w) sum += x;
        CHECK(sum == ipow(q, N));
        CHECK(Rational(w[l], ipow(q, N) - 1) == hyperplane_oracle(P));
        CHECK(Rational(w[l], ipow(q, N) - 1) == delta_bruteforce(N - 1, P, Budget::unlimited()));
        ++done;
    }
}

TEST_CASE("arcs") {
    CHECK(mds_arc_density(2, 3, 2) == 0);
    CHECK(mds_arc_density(2, 2, 3) == Rational(1, 2));
    for (unsigned q : {2u, 3u, 4u, 5u, 7u})
        for (unsigned N = 2; N <= 4; ++N)
            for (unsigned l = N; l <= q + 1; ++l) {
                auto P = moment_curve_arc(Field::of_order(q), N, l);
                if (ipow(q, N) > 5000) continue;
                CHECK(delta_bruteforce(N - 1, P, Budget::unlimited()) == mds_arc_density(N, l, q));
            }
    CHECK_THROWS_AS(moment_curve_arc(Field::of_order(3), 3, 5), std::invalid_argument);
    double v = to_double(mds_arc_density(4, 102, 101));
    CHECK(std::abs(v - 1.0 / 3) < 0.05 / 3);
}

TEST_CASE("arc plus a point beats the arc when N is even") {
    for (unsigned q : {4u, 5u, 7u})
        for (unsigned N = 3; N <= 4; ++N)
            for (unsigned l = N; l <= q - 1; ++l) {
                if (ipow(q, N) > 3000) continue;
                auto P = arc_plus_point(Field::of_order(q), N, l);
                CHECK(P.size() == l);
                CHECK(delta_bruteforce(N - 1, P, Budget::unlimited()) == arc_plus_point_density(N, l, q));
            }
    for (unsigned q = 3; q <= 9; ++q) {
        if (!PrimePower::try_of(q)) continue;
        for (unsigned N = 2; N <= 6; ++N)
            for (unsigned l = 2; l <= q - 1; ++l) {
                Rational gap = arc_plus_point_gap(N, l, q);
                if (l >= N) CHECK(arc_plus_point_density(N, l, q) - mds_arc_density(N, l, q) == gap);
                if (N % 2) CHECK(gap <= 0);
                else CHECK((gap > 0) == (l >= N + 1));
            }
    }
    CHECK(arc_plus_point_gap(4, 5, 7) == Rational(6, 2400));
}

TEST_CASE("average density limits") {
    // hyperplanes with l = q tend to 1/e
    CHECK(avg_limit_q_large(3, 2, 1, 7) == doctest::Approx(std::exp(-1.0)));
    double prev = 1e9;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        double gap = std::abs(to_double(avg_density_formula(3, 2, q, q)) - avg_limit_q_large(3, 2, 1, q));
        CHECK(gap < prev);
        prev = gap;
    }
    for (unsigned q : {2u, 3u, 5u})
        CHECK(avg_rankball_limit_m_large(2, 2, q) == doctest::Approx(std::exp(-(q + 1.0) / (q - 1.0))));
    CHECK(avg_rankball_limit_q_large(2, 2, 50) == doctest::Approx(std::exp(-1.0)));
    CHECK(avg_limit_m_large(2, 1, 1, 3.0, 2, 10) == doctest::Approx(std::exp(-3.0)));
}
