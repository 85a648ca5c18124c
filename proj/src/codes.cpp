#include "rankdens/codes.hpp"

#include "rankdens/parallel.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace rankdens {

// ---------------------------------------------------------------- MatrixCode

MatrixCode MatrixCode::from_rows(const Field& f, unsigned n, unsigned m, const Matrix& rows) {
    if (rows.cols != n * m) throw std::invalid_argument("codeword length must be n*m");
    MatrixCode C;
    C.f_ = f;
    C.n_ = n;
    C.m_ = m;
    C.space_ = Subspace::span(f, rows);
    if (C.space_.dim() == 0) throw std::invalid_argument("a code must be nonzero");
    return C;
}

MatrixCode MatrixCode::span(const Field& f, unsigned n, unsigned m, const std::vector<Matrix>& gens) {
    Matrix rows(static_cast<unsigned>(gens.size()), n * m);
    for (unsigned i = 0; i < gens.size(); ++i) {
        if (gens[i].rows != n || gens[i].cols != m) throw std::invalid_argument("generator has wrong shape");
        std::copy(gens[i].a.begin(), gens[i].a.end(), rows.a.begin() + std::ptrdiff_t(i) * n * m);
    }
    return from_rows(f, n, m, rows);
}

std::vector<Matrix> MatrixCode::basis_matrices() const {
    std::vector<Matrix> out;
    for (unsigned i = 0; i < dim(); ++i) out.push_back(Matrix::from_flat(n_, m_, space_.basis.row(i)));
    return out;
}

bool MatrixCode::contains(const Matrix& M) const {
    if (M.rows != n_ || M.cols != m_) return false;
    return space_.contains(f_, M.a);
}

// ---------------------------------------------------------------- rank kernels

namespace {

// GF(2) rank of n rows of m bits each, packed in one word
unsigned rank_bits(std::uint64_t w, unsigned n, unsigned m) {
    std::uint64_t rows[64];
    const std::uint64_t mask = m == 64 ? ~0ull : ((1ull << m) - 1);
    for (unsigned r = 0; r < n; ++r) rows[r] = (w >> (r * m)) & mask;
    unsigned rk = 0;
    for (unsigned r = 0; r < n; ++r) {
        std::uint64_t v = rows[r];
        if (!v) continue;
        std::uint64_t low = v & (~v + 1);
        ++rk;
        for (unsigned s = r + 1; s < n; ++s)
            if (rows[s] & low) rows[s] ^= v;
    }
    return rk;
}

std::uint64_t pack_bits(const std::vector<Elem>& flat) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i]) w |= 1ull << i;
    return w;
}

unsigned span_min_rank_gf2(unsigned n, unsigned m, const std::vector<std::uint64_t>& g, unsigned stop_below) {
    unsigned best = n < m ? n : m;
    std::uint64_t cur = 0;
    const std::uint64_t total = 1ull << g.size();
    // Gray code: every nonzero combination once
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= g[static_cast<unsigned>(__builtin_ctzll(i))];
        unsigned r = rank_bits(cur, n, m);
        if (r < best) {
            best = r;
            if (best < stop_below) return best;
        }
    }
    return best;
}

} // namespace

unsigned flat_rank(const Field& f, unsigned n, unsigned m, const std::vector<Elem>& flat) {
    if (f.q() == 2 && n * m <= 64) return rank_bits(pack_bits(flat), n, m);
    return rank(f, Matrix::from_flat(n, m, flat));
}

unsigned span_min_rank(const Field& coef, const Field& entry, unsigned n, unsigned m,
                       const std::vector<std::vector<Elem>>& gens, unsigned stop_below) {
    const unsigned k = static_cast<unsigned>(gens.size());
    if (k == 0) throw std::invalid_argument("empty generator list");
    if (entry.q() == 2 && n * m <= 64 && k < 63) {
        std::vector<std::uint64_t> g(k);
        for (unsigned i = 0; i < k; ++i) g[i] = pack_bits(gens[i]);
        return span_min_rank_gf2(n, m, g, stop_below);
    }
    const unsigned q = coef.q();
    const std::size_t len = std::size_t(n) * m;
    unsigned best = n < m ? n : m;
    std::vector<Elem> cur(len), work(len);
    std::vector<Elem> digit(k);
    for (unsigned lead = 0; lead < k; ++lead) {
        cur = gens[lead];
        std::fill(digit.begin(), digit.end(), 0);
        for (;;) {
            // rank of cur
            work = cur;
            unsigned rk = 0;
            for (unsigned c = 0; c < m && rk < n; ++c) {
                unsigned piv = rk;
                while (piv < n && work[piv * m + c] == 0) ++piv;
                if (piv == n) continue;
                if (piv != rk)
                    for (unsigned j = c; j < m; ++j) std::swap(work[piv * m + j], work[rk * m + j]);
                Elem s = entry.inv(work[rk * m + c]);
                for (unsigned i = rk + 1; i < n; ++i) {
                    Elem t = work[i * m + c];
                    if (!t) continue;
                    t = entry.neg(entry.mul(t, s));
                    for (unsigned j = c; j < m; ++j)
                        work[i * m + j] = entry.add(work[i * m + j], entry.mul(t, work[rk * m + j]));
                }
                ++rk;
            }
            if (rk < best) {
                best = rk;
                if (best < stop_below) return best;
            }
            // advance the free coefficients after the leading one
            unsigned j = k;
            bool done = true;
            while (j-- > lead + 1) {
                Elem old = digit[j];
                Elem nw = old + 1 < q ? old + 1 : 0;
                digit[j] = nw;
                Elem delta = coef.sub(nw, old);
                const auto& g = gens[j];
                for (std::size_t x = 0; x < len; ++x)
                    if (g[x]) cur[x] = entry.add(cur[x], entry.mul(delta, g[x]));
                if (nw != 0) {
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return best;
}

unsigned min_distance(const MatrixCode& C) {
    std::vector<std::vector<Elem>> gens;
    for (unsigned i = 0; i < C.dim(); ++i) gens.push_back(C.space().basis.row(i));
    return span_min_rank(C.field(), C.field(), C.n(), C.m(), gens);
}

bool is_mrd(const MatrixCode& C) {
    unsigned n = C.n() < C.m() ? C.n() : C.m();
    unsigned m = C.n() < C.m() ? C.m() : C.n();
    unsigned d = min_distance(C);
    return C.dim() == m * (n - d + 1);
}

Grassmannian enumerate_subspaces(unsigned N, unsigned k, const Field& f, const Budget& budget) {
    if (k > N) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    budget.require(qbinom(N, k, f.q()), "Grassmannian size");
    return Grassmannian(f, N, k);
}

BigInt count_codes_min_rank(const Field& coef, const Field& entry, unsigned n, unsigned m,
                            const std::vector<std::vector<Elem>>& ambient, unsigned k, unsigned d,
                            const Budget& budget, unsigned jobs) {
    const unsigned D = ambient.empty() ? n * m : static_cast<unsigned>(ambient.size());
    for (const auto& v : ambient)
        if (v.size() != std::size_t(n) * m) throw std::invalid_argument("ambient basis element has wrong size");
    if (k == 0 || k > D) throw std::invalid_argument("code dimension out of range");
    Grassmannian G = enumerate_subspaces(D, k, coef, budget);
    const std::size_t len = std::size_t(n) * m;

    auto results = run_chunks<std::uint64_t>(G.size(), jobs, [&](Range r) {
        std::uint64_t cnt = 0;
        std::vector<std::vector<Elem>> gens(k, std::vector<Elem>(len));
        G.for_each(r.begin, r.end, [&](const Matrix& B) {
            if (ambient.empty()) {
                for (unsigned i = 0; i < k; ++i)
                    std::copy(B.a.begin() + std::ptrdiff_t(i) * D, B.a.begin() + std::ptrdiff_t(i + 1) * D,
                              gens[i].begin());
            } else {
                for (unsigned i = 0; i < k; ++i) {
                    auto& g = gens[i];
                    std::fill(g.begin(), g.end(), 0);
                    for (unsigned c = 0; c < D; ++c) {
                        Elem lam = B(i, c);
                        if (!lam) continue;
                        const auto& a = ambient[c];
                        for (std::size_t x = 0; x < len; ++x)
                            if (a[x]) g[x] = entry.add(g[x], entry.mul(lam, a[x]));
                    }
                }
            }
            if (span_min_rank(coef, entry, n, m, gens, d) >= d) ++cnt;
        });
        return cnt;
    });
    BigInt total = 0;
    for (auto c : results) total += c;
    return total;
}

nlohmann::ordered_json DensityResult::to_json(bool with_time) const {
    nlohmann::ordered_json j;
    if (!kind.empty()) j["kind"] = kind;
    j["q"] = q;
    j["n"] = n;
    j["m"] = m;
    j["k"] = k;
    j["d"] = d;
    j["count"] = count.str();
    j["total"] = total.str();
    j["density_num"] = boost::multiprecision::numerator(density).str();
    j["density_den"] = boost::multiprecision::denominator(density).str();
    j["density_float"] = to_double(density);
    j["method"] = method;
    j["elapsed_ms"] = with_time ? elapsed_ms : 0.0;
    return j;
}

DensityResult density_bruteforce(unsigned n, unsigned m, unsigned k, unsigned d, unsigned q,
                                 const Budget& budget, unsigned jobs) {
    auto t0 = std::chrono::steady_clock::now();
    if (n > m) throw std::invalid_argument("expects n <= m");
    if (d == 0 || d > n) throw std::invalid_argument("minimum distance out of range");
    Field f = Field::of_order(q);
    DensityResult r;
    r.q = q;
    r.n = n;
    r.m = m;
    r.k = k;
    r.d = d;
    r.total = qbinom(n * m, k, q);
    r.count = count_codes_min_rank(f, f, n, m, {}, k, d, budget, jobs);
    r.density = Rational(r.count, r.total);
    r.method = "brute_force";
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

BigInt spectrum_free_count(unsigned m, unsigned q, const Budget& budget) {
    Field f = Field::of_order(q);
    BigInt total = ipow(q, m * m);
    budget.require(total, "spectrum-free enumeration");
    std::uint64_t count_all = static_cast<std::uint64_t>(total);
    BigInt count = 0;
    Matrix M(m, m), S(m, m);
    std::vector<Elem> digits(std::size_t(m) * m, 0);
    for (std::uint64_t idx = 0; idx < count_all; ++idx) {
        std::uint64_t v = idx;
        for (auto& e : M.a) {
            e = static_cast<Elem>(v % q);
            v /= q;
        }
        bool ok = true;
        for (Elem lam = 0; lam < q && ok; ++lam) {
            S = M;
            for (unsigned i = 0; i < m; ++i) S(i, i) = f.add(S(i, i), lam);
            if (det(f, S) == 0) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

HejarCheck hejar_identity_check(unsigned m, unsigned q, const Budget& budget, unsigned jobs) {
    HejarCheck h;
    DensityResult r = density_bruteforce(2, m, m, 2, q, budget, jobs);
    h.density = r.density;
    Rational lhs = r.density * Rational(qbinom(2 * m, m, q));
    h.lhs = boost::multiprecision::numerator(lhs);
    h.rhs = spectrum_free_count(m, q, budget);
    h.holds = boost::multiprecision::denominator(lhs) == 1 && h.lhs == h.rhs;
    return h;
}

Rational density_3x3_formula(const BigInt& q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    BigInt q2 = q * q, q3 = q2 * q, q7 = ipow(q, 7), q9 = ipow(q, 9);
    BigInt num = (q - 1) * (q3 - 1) * ipow(q3 - q, 3) * ipow(q3 - q2, 2) * (q3 - q2 - q - 1);
    BigInt den = 3 * (q7 - 1) * (q9 - 1) * (q9 - q);
    return Rational(num, den);
}

MrdLowerBound mrd_lowerbound_formula(unsigned n, const BigInt& q) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    BigInt gl = gl_order(n, q);
    BigInt qn1 = ipow(q, n) - 1;
    Rational first = Rational(gl * gl, BigInt(n) * qn1 * qn1);
    Rational bracket = 1 + Rational(binomial(n - 1, 2) * qn1 * (q - 2), q - 1);
    MrdLowerBound b;
    b.count = first * bracket;
    b.density = b.count / Rational(qbinom(long(n) * n, n, q));
    return b;
}

unsigned gamma_factors(unsigned n) {
    unsigned g = 0;
    for (unsigned d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            n /= d;
            ++g;
        }
    if (n > 1) ++g;
    return g;
}

Rational kantor_lowerbound(unsigned n) {
    if (n < 4 || is_prime(n)) throw std::invalid_argument("n must be composite");
    unsigned t = n;
    while (t % 3 == 0) t /= 3;
    if (t == 1) throw std::invalid_argument("n must not be a power of 3");
    BigInt gl = gl_order(n, 2);
    BigInt two_n = ipow(2, n);
    unsigned g = gamma_factors(n);
    return Rational(gl * gl * two_n * ipow(two_n - 1, g - 2), BigInt(2 * n));
}

MinftyBound minfty_bound(unsigned n, unsigned d, unsigned q, double eps) {
    if (d < 1 || d > n) throw std::invalid_argument("distance out of range");
    Certified pi = pi_q_infinite(q, eps);
    double e1 = double(q) * (d - 1) * (n - d + 1) + 1;
    double qb = to_double(Rational(qbinom(n, d - 1, q)));
    MinftyBound b;
    auto f1 = [&](double p) { return std::pow(p, -e1); };
    auto f2 = [&](double p) { return 1.0 / (qb * (p - 1) + 1); };
    // both expressions are decreasing in pi, so the interval maps endpoint to endpoint
    b.first = {(f1(pi.lo()) + f1(pi.hi())) / 2, (f1(pi.lo()) - f1(pi.hi())) / 2};
    b.second = {(f2(pi.lo()) + f2(pi.hi())) / 2, (f2(pi.lo()) - f2(pi.hi())) / 2};
    b.min = b.first.value <= b.second.value ? b.first : b.second;
    return b;
}

std::vector<AsymptoticEstimate> asymptotic_constants(unsigned n, unsigned d, unsigned m) {
    if (n > m) throw std::invalid_argument("expects n <= m");
    if (d < 1 || d > n) throw std::invalid_argument("distance out of range");
    std::vector<AsymptoticEstimate> out;
    AsymptoticEstimate up;
    up.label = "mrd_upper";
    up.exact_constant = false;
    up.constant_float = std::nan("");
    up.exponent = -long(d - 1) * long(n - d + 1) + 1;
    out.push_back(up);
    if (n == m && d == n) {
        long e = -long(n) * n * n + 3 * long(n) * n - long(n);
        AsymptoticEstimate lo;
        lo.label = "full_rank_lower";
        lo.exact_constant = false;
        lo.constant_float = std::nan("");
        lo.exponent = e;
        out.push_back(lo);
        if (is_prime(n)) {
            AsymptoticEstimate ex;
            ex.label = "full_rank_exact";
            ex.constant = Rational(BigInt((n - 1) * (n - 2)), BigInt(2 * n));
            ex.exponent = e;
            out.push_back(ex);
        }
    }
    return out;
}

} // namespace rankdens
