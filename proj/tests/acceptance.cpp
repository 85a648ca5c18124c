// Acceptance run: one PASS/FAIL line per criterion. Expected values come from
// the enumerators in oracles.hpp or from small direct computations here, never
// from the library's closed forms.

#include "oracles.hpp"

#include "rankdens/cli.hpp"
#include "rankdens/codes.hpp"
#include "rankdens/critical.hpp"
#include "rankdens/qcomb.hpp"
#include "rankdens/restricted.hpp"
#include "rankdens/semifield.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace rankdens;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << what << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

// 3 x 3 matrices over F_2 as 9-bit masks, row i in bits 3i..3i+2
bool invertible_f2(unsigned m) {
    unsigned r[3] = {m & 7, (m >> 3) & 7, (m >> 6) & 7};
    return r[0] && r[1] && r[2] && (r[0] ^ r[1]) && (r[0] ^ r[2]) && (r[1] ^ r[2]) && (r[0] ^ r[1] ^ r[2]);
}

// ordered bases of 3-dim spaces whose 7 nonzero vectors are invertible, over |GL_3(F_2)|
BigInt mrd192_oracle() {
    std::vector<unsigned> inv;
    for (unsigned m = 1; m < 512; ++m)
        if (invertible_f2(m)) inv.push_back(m);
    BigInt triples = 0;
    for (unsigned a : inv)
        for (unsigned b : inv) {
            if (b == a || !invertible_f2(a ^ b)) continue;
            for (unsigned c : inv) {
                if (c == a || c == b || c == (a ^ b)) continue;
                if (invertible_f2(a ^ c) && invertible_f2(b ^ c) && invertible_f2(a ^ b ^ c)) ++triples;
            }
        }
    return triples / ((8 - 1) * (8 - 2) * (8 - 4));
}

std::vector<std::vector<Elem>> all_matrices(const Field& f, unsigned n) {
    std::vector<std::vector<Elem>> out;
    std::uint64_t total = ipow64(f.q(), n * n);
    for (std::uint64_t t = 0; t < total; ++t) out.push_back(oracle::digits(t, n * n, f.q()));
    return out;
}

// m x m matrices over F_q without an eigenvalue in F_q
BigInt spectrum_free_oracle(unsigned m, unsigned q) {
    Field f = Field::of_order(q);
    BigInt s = 0;
    for (const auto& v : all_matrices(f, m)) {
        bool ok = true;
        for (Elem lam = 0; lam < q && ok; ++lam) {
            auto M = Matrix::from_flat(m, m, v);
            for (unsigned i = 0; i < m; ++i) M(i, i) = f.sub(M(i, i), lam);
            ok = rank(f, M) == m;
        }
        if (ok) ++s;
    }
    return s;
}

// rank strata by filtering every n x n matrix over the entry field
std::vector<BigInt> strata_oracle(Kind k, unsigned n, unsigned q) {
    Field e = Field::of_order(k == Kind::hermitian ? q * q : q);
    const unsigned h = PrimePower::of(q).h;
    std::vector<BigInt> out(n + 1, 0);
    for (const auto& v : all_matrices(e, n)) {
        auto M = Matrix::from_flat(n, n, v);
        bool in = true;
        for (unsigned i = 0; i < n && in; ++i)
            for (unsigned j = 0; j < n && in; ++j) {
                switch (k) {
                case Kind::symmetric: in = M(i, j) == M(j, i); break;
                case Kind::alternating: in = M(i, j) == e.neg(M(j, i)) && M(i, i) == 0; break;
                case Kind::hermitian: in = M(i, j) == e.frobenius_p(M(j, i), h); break;
                case Kind::full: break;
                }
            }
        if (in) ++out[rank(e, M)];
    }
    return out;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    auto r1 = density_bruteforce(3, 3, 3, 3, 2, Budget::unlimited(), 1);
    double t1 = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto r8 = density_bruteforce(3, 3, 3, 3, 2, Budget::unlimited(), 8);
    double t8 = seconds_since(t0);
    BigInt want = mrd192_oracle();
    bool ok = want == 192 && r1.count == want && r8.count == want && r1.total == 788035 &&
              density_3x3_formula(2) * qbinom(9, 3, 2) == Rational(want) &&
              mrd_lowerbound_formula(3, 2).count == Rational(want) && t1 <= 600 && t8 <= 120;
    std::ostringstream os;
    os << "MRD-192: enumerated " << r1.count << " of " << r1.total << ", oracle " << want
       << ", formula and lower bound agree (" << fixed(t1, 2) << " s on 1 job, " << fixed(t8, 2) << " s on 8)";
    report(1, ok, os.str());
}

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    os << "spectrum-free identity:";
    for (auto [m, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        Rational lhs = density_bruteforce(2, m, m, 2, q, Budget::unlimited(), 4).density * qbinom(2 * m, m, q);
        BigInt rhs = spectrum_free_oracle(m, q);
        ok = ok && lhs == Rational(rhs);
        os << " (" << m << "," << q << ") " << to_string(lhs) << (lhs == Rational(rhs) ? "=" : "!=") << rhs;
    }
    double t = seconds_since(t0);
    ok = ok && t <= 300;
    os << " (" << fixed(t, 2) << " s)";
    report(2, ok, os.str());
}

void criterion3() {
    unsigned cases = 0, bad = 0;
    for (unsigned q : {2u, 3u})
        for (unsigned N = 1; N <= 3; ++N) {
            oracle::Geometry g(Field::of_order(q), N);
            for (unsigned k = 0; k <= N; ++k)
                for (unsigned l = 1; l <= 6 && l <= g.pts.size(); ++l) {
                    ++cases;
                    if (avg_density_formula(N, k, l, q) != oracle::average_density(g, k, l)) ++bad;
                }
        }
    report(3, bad == 0,
           "average density formula vs exhaustive mean: " + std::to_string(cases - bad) + "/" +
               std::to_string(cases) + " cases equal");
}

void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    unsigned cases = 0, bad = 0;
    struct G {
        unsigned q, Nmax, lmax;
    };
    for (G gr : {G{2, 4, 5}, G{3, 3, 4}})
        for (unsigned N = 1; N <= gr.Nmax; ++N) {
            oracle::Geometry g(Field::of_order(gr.q), N);
            for (unsigned s = 0; s <= N; ++s)
                for (unsigned rho = 2; rho <= N; ++rho)
                    for (unsigned l = rho; l <= gr.lmax; ++l) {
                        BigInt cap = (ipow(BigInt(gr.q), rho) - 1) / (gr.q - 1);
                        if (l > cap) continue;
                        ++cases;
                        if (lambda(N, s, l, rho, gr.q) != oracle::count_avoiding(g, s, l, rho)) ++bad;
                    }
        }
    double t = seconds_since(t0);
    report(4, bad == 0 && t <= 600,
           "lambda vs point-set counting: " + std::to_string(cases - bad) + "/" + std::to_string(cases) +
               " cases equal (" + fixed(t, 2) + " s)");
}

void criterion5() {
    // The published row is "0.1352 & 0.1333 & 0.1295 & 0.1211 & 0.1003 & 0",
    // stated there as truncated after four decimals. Compare truncations and
    // show what rounding would give.
    const char* printed[] = {"0.1352", "0.1333", "0.1295", "0.1211", "0.1003", "0.0000"};
    auto t0 = std::chrono::steady_clock::now();
    auto rows = critical_example_rows();
    bool ok = rows.size() == 6;
    std::string trunc, rounded;
    unsigned rounding_matches = 0;
    for (std::size_t i = 0; i < rows.size() && i < 6; ++i) {
        ok = ok && rows[i].rho == 10 - i && rows[i].density == avg_density_rank_formula(10, 6, 31, 10 - i, 2);
        auto t = decimal_truncated(rows[i].density, 4);
        auto r = decimal_rounded(rows[i].density, 4);
        ok = ok && t == printed[i];
        rounding_matches += r == printed[i];
        trunc += (i ? " " : "") + t;
        rounded += (i ? " " : "") + r;
    }
    double t = seconds_since(t0);
    ok = ok && t <= 60;
    report(5, ok,
           "critical example, truncated: " + trunc + " (rounded: " + rounded + "; " +
               std::to_string(rounding_matches) + "/6 printed digits survive rounding)");
}

void criterion6() {
    bool ok = true;
    unsigned cases = 0;
    for (Kind k : {Kind::symmetric, Kind::alternating, Kind::hermitian})
        for (unsigned q : {2u, 3u})
            for (unsigned n = 1; n <= (k == Kind::hermitian ? 2u : 3u); ++n) {
                auto st = strata_oracle(k, n, q);
                BigInt sum = 0;
                for (unsigned i = 0; i <= n; ++i) {
                    ++cases;
                    ok = ok && rank_count(k, n, i, q) == st[i];
                    sum += st[i];
                }
                ok = ok && sum == ipow(BigInt(q), ambient_dim(k, n));
            }
    BigInt printed = rank_count_hermitian_printed(1, 1, 2);
    BigInt enumerated = strata_oracle(Kind::hermitian, 1, 2)[1];
    ok = ok && printed == 3 && enumerated == 1;
    report(6, ok,
           "rank strata: " + std::to_string(cases) + " counts match enumeration, sums are q^dim; Hermitian (2,1,1) printed " +
               printed.str() + " vs enumerated " + enumerated.str());
}

void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    os << "tensor identity:";
    struct T {
        unsigned r, n, q;
    };
    for (T t : {T{1, 2, 2}, T{1, 2, 3}, T{2, 3, 2}}) {
        Rational a = density_bruteforce(t.r, t.n, t.n, t.r, t.q, Budget::unlimited(), 4).density;
        Rational b = density_bruteforce(t.n, t.n, t.r, t.n, t.q, Budget::unlimited(), 4).density;
        bool eq = a / b == tensor_ratio(t.r, t.n, t.q);
        ok = ok && eq;
        os << " (" << t.r << "," << t.n << "," << t.q << ") " << to_string(a / b) << (eq ? " ok" : " MISMATCH");
    }
    double t = seconds_since(t0);
    ok = ok && t <= 900;
    os << " (" << fixed(t, 2) << " s)";
    report(7, ok, os.str());
}

void criterion8() {
    bool ok = true;
    unsigned trips = 0;
    for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        ExtField F(Field::of_order(q), n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                for (Elem c = 0; c < F.order(); ++c) {
                    auto s = make_twisted_spec(F, i, j, c);
                    if (F.rel_norm(c, s.l) == 1) continue;
                    auto C = normalize_contains_x(twisted_code(s, F));
                    auto S = code_to_semifield(C);
                    ok = ok && semifield_to_code(S) == C;
                    ok = ok && code_to_semifield(semifield_to_code(S)).coeffs() == S.coeffs();
                    ++trips;
                }
    }
    std::ostringstream os;
    os << "semifields: " << trips << " round trips;";
    for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        ExtField F(Field::of_order(q), n);
        BigInt aut = aut_group_size_bruteforce(c0_code(F), Budget::unlimited(), 8);
        BigInt qn = ipow(BigInt(q), n);
        BigInt want = BigInt(PrimePower::of(q).h) * n * (qn - 1) * (qn - 1);
        ok = ok && aut == want;
        os << " |Aut| (" << q << "," << n << ") " << aut;
    }
    // the orbit of the field code over F_8, counted directly
    ExtField F(Field::of_order(2), 3);
    auto C0 = c0_code(F);
    std::vector<LinearizedPoly> polys;
    for (const auto& M : general_linear_group(F.base(), 3, Budget::unlimited()))
        polys.push_back(LinearizedPoly::from_matrix(F, M));
    std::set<LinPolyCode> orbit;
    for (const auto& f : polys) {
        auto L = C0.compose_left(f);
        for (const auto& g : polys) orbit.insert(L.compose_right(g));
    }
    auto census = twisted_census(2, 3, Budget::unlimited(), 8);
    ok = ok && orbit.size() == 192 && census.orbit_sum == Rational(BigInt(orbit.size()));
    os << "; orbit sum " << to_string(census.orbit_sum) << ", direct orbit " << orbit.size();
    report(8, ok, os.str());
}

void criterion9() {
    // (a)
    Rational a = density_3x3_formula(101) * ipow(BigInt(101), 3);
    bool ok_a = std::fabs(to_double(a) - 1.0 / 3) <= 0.05 / 3;
    // (b) N = 3, k = 2, l = q: the limit is exp(-q^(k+1-N)) = 1/e
    bool ok_b = true;
    double prev = 1e9;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        double gap = std::fabs(to_double(avg_density_formula(3, 2, q, q)) - std::exp(-1.0));
        ok_b = ok_b && gap < prev;
        prev = gap;
    }
    // (c)
    bool ok_c = true;
    for (unsigned q = 2; q <= 16; ++q) {
        if (!PrimePower::try_of(q)) continue;
        auto c = comparison_inequality_check(q, 60);
        ok_c = ok_c && c.holds && c.conclusive && c.margin - c.error > 0;
    }
    // (d) partial sum 1 - 1 + 1/2 - 1/6
    double target = 1.0 - 1.0 + 0.5 - 1.0 / 6;
    double arc = to_double(mds_arc_density(4, 102, 101));
    bool ok_d = std::fabs(arc - target) <= 0.05 * target;
    report(9, ok_a && ok_b && ok_c && ok_d,
           std::string("asymptotics: (a) q^3 delta = ") + fixed(to_double(a), 4) + (ok_a ? " ok" : " off") +
               ", (b) monotone approach to 1/e" + (ok_b ? " ok" : " broken") + ", (c) certified margins" +
               (ok_c ? " ok" : " failed") + ", (d) arc density " + fixed(arc, 4) + (ok_d ? " ok" : " off"));
}

void criterion10() {
    std::string outs[2];
    int codes[2];
    for (int i = 0; i < 2; ++i) {
        cli::RunConfig cfg;
        cfg.command = "verify";
        cfg.name = "all";
        cfg.jobs = i ? 8 : 1;
        cfg.format = cli::Format::json;
        std::ostringstream out, err;
        codes[i] = cli::run(cfg, out, err);
        outs[i] = out.str();
    }
    bool ok = outs[0] == outs[1] && codes[0] == 0 && codes[1] == 0 && !outs[0].empty();
    report(10, ok,
           "determinism: verify all at 1 and 8 jobs, " + std::to_string(outs[0].size()) + " bytes, " +
               (outs[0] == outs[1] ? "identical" : "different"));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    return failures ? 1 : 0;
}
