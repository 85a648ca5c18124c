#include "rankdens/restricted.hpp"

#include <chrono>
#include <stdexcept>

namespace rankdens {

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::symmetric: return "symmetric";
    case Kind::alternating: return "alternating";
    case Kind::hermitian: return "hermitian";
    case Kind::full: return "full";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    for (Kind k : {Kind::symmetric, Kind::alternating, Kind::hermitian, Kind::full})
        if (kind_name(k) == s) return k;
    throw std::invalid_argument("unknown ambient kind: " + s);
}

unsigned ambient_dim(Kind k, unsigned n) {
    switch (k) {
    case Kind::symmetric: return n * (n + 1) / 2;
    case Kind::alternating: return n * (n - 1) / 2;
    case Kind::hermitian:
    case Kind::full: return n * n;
    }
    return 0;
}

Field entry_field(Kind k, unsigned q) {
    Field base = Field::of_order(q);
    if (k != Kind::hermitian) return base;
    return ExtField(base, 2).as_field();
}

std::vector<std::vector<Elem>> ambient_basis(Kind k, unsigned n, unsigned q) {
    Field E = entry_field(k, q);
    std::vector<std::vector<Elem>> out;
    auto unit = [&] { return std::vector<Elem>(std::size_t(n) * n, 0); };
    if (k == Kind::full) {
        for (unsigned x = 0; x < n * n; ++x) {
            auto v = unit();
            v[x] = 1;
            out.push_back(v);
        }
        return out;
    }
    if (k != Kind::alternating)
        for (unsigned i = 0; i < n; ++i) {
            auto v = unit();
            v[i * n + i] = 1;
            out.push_back(v);
        }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            auto v = unit();
            v[i * n + j] = 1;
            v[j * n + i] = k == Kind::alternating ? E.neg(1) : 1;
            out.push_back(v);
            if (k == Kind::hermitian) {
                // w = t is encoded as q; its conjugate is w^q
                auto u = unit();
                Elem w = static_cast<Elem>(q);
                u[i * n + j] = w;
                u[j * n + i] = E.pow(w, q);
                out.push_back(u);
            }
        }
    return out;
}

bool in_ambient(Kind k, unsigned n, unsigned q, const std::vector<Elem>& M) {
    Field E = entry_field(k, q);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Elem a = M[i * n + j], b = M[j * n + i];
            switch (k) {
            case Kind::symmetric:
                if (a != b) return false;
                break;
            case Kind::alternating:
                if (a != E.neg(b) || (i == j && a != 0)) return false;
                break;
            case Kind::hermitian:
                if (a != E.pow(b, q)) return false;
                break;
            case Kind::full: break;
            }
        }
    return true;
}

BigInt rank_count(Kind k, unsigned n, unsigned i, const BigInt& q) {
    if (i > n) throw std::invalid_argument("rank exceeds n");
    switch (k) {
    case Kind::symmetric: {
        Rational r = 1;
        for (unsigned s = 1; s <= i / 2; ++s) r *= Rational(ipow(q, 2 * s), ipow(q, 2 * s) - 1);
        for (unsigned s = 0; s < i; ++s) r *= ipow(q, n - s) - 1;
        if (denominator(r) != 1) throw std::logic_error("symmetric rank count is not an integer");
        return numerator(r);
    }
    case Kind::alternating: {
        BigInt s = 0;
        for (unsigned t = 0; t <= i; ++t) {
            unsigned e = t * (t - (t ? 1 : 0)) / 2 + (i - t) * (i - t - (i - t ? 1 : 0)) / 2;
            BigInt term = ipow(q, e) * qbinom(i, t, q);
            if ((i - t) % 2) s -= term;
            else s += term;
        }
        return qbinom(n, i, q) * s;
    }
    case Kind::hermitian: {
        BigInt p = 1;
        for (unsigned j = 1; j <= i; ++j) p *= j % 2 ? ipow(q, j) - 1 : ipow(q, j) + 1;
        return qbinom(n, i, q * q) * ipow(q, i * (i ? i - 1 : 0) / 2) * p;
    }
    case Kind::full: return rank_count_full(n, n, i, q);
    }
    return 0;
}

BigInt rank_count_hermitian_printed(unsigned n, unsigned i, const BigInt& q) {
    if (i > n) throw std::invalid_argument("rank exceeds n");
    BigInt p = 1;
    for (unsigned j = 1; j <= i; ++j) p *= j % 2 ? ipow(q, j) + 1 : ipow(q, j) - 1;
    return qbinom(n, i, q * q) * ipow(q, i * (i ? i - 1 : 0) / 2) * p;
}

std::vector<BigInt> rank_strata_bruteforce(Kind k, unsigned n, unsigned q, const Budget& budget) {
    Field E = entry_field(k, q);
    auto basis = ambient_basis(k, n, q);
    const unsigned D = static_cast<unsigned>(basis.size());
    budget.require(ipow(q, D), "rank stratification");
    std::vector<std::uint64_t> cnt(n + 1, 0);
    std::uint64_t total = ipow64(q, D);
    std::vector<Elem> M(std::size_t(n) * n);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::fill(M.begin(), M.end(), 0);
        std::uint64_t v = t;
        for (unsigned c = 0; c < D; ++c) {
            Elem lam = static_cast<Elem>(v % q);
            v /= q;
            if (!lam) continue;
            for (std::size_t x = 0; x < M.size(); ++x)
                if (basis[c][x]) M[x] = E.add(M[x], E.mul(lam, basis[c][x]));
        }
        ++cnt[flat_rank(E, n, n, M)];
    }
    return {cnt.begin(), cnt.end()};
}

unsigned dim_bound(Kind k, unsigned n, unsigned d) {
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    switch (k) {
    case Kind::symmetric: return (n - d) % 2 == 0 ? n * (n - d + 2) / 2 : (n + 1) * (n - d + 1) / 2;
    case Kind::alternating: {
        if (d % 2) throw std::invalid_argument("alternating codes have even minimum distance");
        unsigned e = d / 2, t = n / 2;
        return n * (n - 1) / (2 * t) * (t - e + 1);
    }
    case Kind::hermitian:
    case Kind::full: return n * (n - d + 1);
    }
    return 0;
}

DensityResult restricted_density_bruteforce(Kind k, unsigned n, unsigned dim, unsigned d, unsigned q,
                                            const Budget& budget, unsigned jobs) {
    auto t0 = std::chrono::steady_clock::now();
    Field F = Field::of_order(q);
    Field E = entry_field(k, q);
    auto basis = ambient_basis(k, n, q);
    DensityResult r;
    r.q = q;
    r.n = n;
    r.m = n;
    r.k = dim;
    r.d = d;
    r.kind = kind_name(k);
    r.total = qbinom(static_cast<long>(basis.size()), dim, q);
    r.count = count_codes_min_rank(F, E, n, n, basis, dim, d, budget, jobs);
    r.density = Rational(r.count, r.total);
    r.method = "brute_force";
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

long ball_asymptotic_exponent(Kind k, unsigned n, unsigned r) {
    if (r > n) throw std::invalid_argument("radius exceeds n");
    const long N = n, R = r;
    switch (k) {
    case Kind::symmetric: return N * R - R * (R - 1) / 2;
    case Kind::alternating:
        if (R % 2 == 0) return R * N - R * (R + 1) / 2;
        return (R - 1) * N - (R - 1) * R / 2;
    case Kind::hermitian:
    case Kind::full: return R * (2 * N - R);
    }
    return 0;
}

long hermitian_sparseness_exponent_printed(unsigned n, unsigned dim, unsigned d) {
    const long N = n, K = dim, D = d;
    return N * N - K + 1 - (D - 1) * (2 * N + D - 1);
}

Sparseness sparseness_exponent(Kind k, unsigned n, unsigned dim, unsigned d) {
    if (k == Kind::full) throw std::invalid_argument("use the unrestricted MRD bound for full ambients");
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    if (dim < 1 || dim > dim_bound(k, n, d)) throw std::invalid_argument("dimension out of range");
    const long N = n, D = d;
    Sparseness s;
    switch (k) {
    case Kind::symmetric: s.threshold = N * (N + 1) / 2 + 1 - N * (D - 1) + (D - 1) * (D - 2) / 2; break;
    case Kind::alternating: s.threshold = N * (N - 1) / 2 + 1 - (D - 2) * N + (D - 1) * (D - 2) / 2; break;
    default: s.threshold = long(ambient_dim(k, n)) + 1 - ball_asymptotic_exponent(k, n, d - 1); break;
    }
    s.exponent = s.threshold - long(dim);
    if (long(dim) < s.threshold) s.limit = 1;
    else if (long(dim) > s.threshold) s.limit = 0;
    s.estimate.label = kind_name(k) + " density upper bound";
    s.estimate.exponent = s.exponent;
    return s;
}

Rational density_2dim_formula(unsigned n, unsigned q, std::optional<BigInt> s, const Budget& budget) {
    if (!s) s = spectrum_free_count(n, q, budget);
    BigInt Q = q, qq = ipow(Q, n * n);
    return Rational(*s * gl_order(n, Q), (qq - 1) * (qq - Q));
}

Rational tensor_ratio(unsigned r, unsigned n, const BigInt& q) {
    if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
    return Rational(gl_order(r, q) * qbinom(n * n, r, q), gl_order(n, q) * qbinom(r * n, n, q));
}

} // namespace rankdens
