#include "rankdens/linpoly.hpp"

#include <stdexcept>

namespace rankdens {

namespace {

void check_same(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.n() != g.n() || f.field().order() != g.field().order())
        throw std::invalid_argument("linearized polynomials live over different fields");
}

std::vector<Elem> power_basis(const ExtField& F) {
    std::vector<Elem> b(F.n());
    for (unsigned k = 0; k < F.n(); ++k) b[k] = F.basis(k);
    return b;
}

} // namespace

LinearizedPoly::LinearizedPoly(ExtField field, std::vector<Elem> coeffs)
    : F_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() != F_.n()) throw std::invalid_argument("need exactly n coefficients");
    for (auto e : c_)
        if (e >= F_.order()) throw std::invalid_argument("coefficient outside the field");
}

LinearizedPoly LinearizedPoly::zero(const ExtField& F) { return {F, std::vector<Elem>(F.n(), 0)}; }

LinearizedPoly LinearizedPoly::identity(const ExtField& F) { return monomial(F, 0, 1); }

LinearizedPoly LinearizedPoly::monomial(const ExtField& F, unsigned i, Elem a) {
    std::vector<Elem> c(F.n(), 0);
    c[i % F.n()] = a;
    return {F, c};
}

bool LinearizedPoly::is_zero() const {
    for (auto e : c_)
        if (e) return false;
    return true;
}

Elem LinearizedPoly::evaluate(Elem a) const {
    Elem s = 0;
    for (unsigned i = 0; i < c_.size(); ++i)
        if (c_[i]) s = F_.add(s, F_.mul(c_[i], F_.frobenius(a, i)));
    return s;
}

Matrix LinearizedPoly::to_matrix(const std::vector<Elem>& basis) const {
    unsigned n = F_.n();
    const Field& K = F_.base();
    std::vector<Elem> b = basis.empty() ? power_basis(F_) : basis;
    if (b.size() != n) throw std::invalid_argument("basis has wrong length");
    Matrix M(n, n);
    if (basis.empty()) {
        for (unsigned k = 0; k < n; ++k) {
            auto col = F_.coords(evaluate(b[k]));
            for (unsigned r = 0; r < n; ++r) M(r, k) = col[r];
        }
        return M;
    }
    // coordinates in b: solve B y = coords(v) where B has columns coords(b_k)
    Matrix B(n, n);
    for (unsigned k = 0; k < n; ++k) {
        auto col = F_.coords(b[k]);
        for (unsigned r = 0; r < n; ++r) B(r, k) = col[r];
    }
    auto Binv = inverse(K, B);
    if (!Binv) throw std::invalid_argument("basis elements are dependent");
    Matrix V(n, n);
    for (unsigned k = 0; k < n; ++k) {
        auto col = F_.coords(evaluate(b[k]));
        for (unsigned r = 0; r < n; ++r) V(r, k) = col[r];
    }
    return mul(K, *Binv, V);
}

unsigned LinearizedPoly::rank() const { return rankdens::rank(F_.base(), to_matrix()); }

std::vector<Elem> solve_ext(const ExtField& F, std::vector<std::vector<Elem>> A, std::vector<Elem> b) {
    std::size_t n = A.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && A[piv][c] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular system over the extension field");
        std::swap(A[piv], A[c]);
        std::swap(b[piv], b[c]);
        Elem s = F.inv(A[c][c]);
        for (std::size_t j = c; j < n; ++j) A[c][j] = F.mul(s, A[c][j]);
        b[c] = F.mul(s, b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c] == 0) continue;
            Elem t = F.neg(A[i][c]);
            for (std::size_t j = c; j < n; ++j) A[i][j] = F.add(A[i][j], F.mul(t, A[c][j]));
            b[i] = F.add(b[i], F.mul(t, b[c]));
        }
    }
    return b;
}

LinearizedPoly LinearizedPoly::from_matrix(const ExtField& F, const Matrix& M,
                                           const std::vector<Elem>& basis) {
    unsigned n = F.n();
    if (M.rows != n || M.cols != n) throw std::invalid_argument("matrix must be n x n");
    std::vector<Elem> b = basis.empty() ? power_basis(F) : basis;
    if (b.size() != n) throw std::invalid_argument("basis has wrong length");
    // targets v_k = sum_r M(r,k) b_r, Moore system sum_i f_i b_k^(q^i) = v_k
    std::vector<std::vector<Elem>> A(n, std::vector<Elem>(n));
    std::vector<Elem> v(n, 0);
    for (unsigned k = 0; k < n; ++k) {
        for (unsigned i = 0; i < n; ++i) A[k][i] = F.frobenius(b[k], i);
        for (unsigned r = 0; r < n; ++r) v[k] = F.add(v[k], F.mul(F.embed(M(r, k)), b[r]));
    }
    return {F, solve_ext(F, A, v)};
}

LinearizedPoly LinearizedPoly::adjoint() const {
    unsigned n = F_.n();
    std::vector<Elem> c(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        unsigned j = (n - i) % n;
        c[j] = F_.frobenius(c_[i], j);
    }
    return {F_, c};
}

LinearizedPoly LinearizedPoly::rho_twist(unsigned r) const {
    std::vector<Elem> c = c_;
    for (auto& e : c) e = F_.frobenius_p(e, r);
    return {F_, c};
}

LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g) {
    check_same(f, g);
    const ExtField& F = f.F_;
    unsigned n = F.n();
    std::vector<Elem> c(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (f.c_[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (g.c_[j] == 0) continue;
            unsigned k = (i + j) % n;
            c[k] = F.add(c[k], F.mul(f.c_[i], F.frobenius(g.c_[j], i)));
        }
    }
    return {F, c};
}

LinearizedPoly operator+(const LinearizedPoly& f, const LinearizedPoly& g) {
    check_same(f, g);
    std::vector<Elem> c(f.n());
    for (unsigned i = 0; i < f.n(); ++i) c[i] = f.F_.add(f.c_[i], g.c_[i]);
    return {f.F_, c};
}

LinearizedPoly operator-(const LinearizedPoly& f, const LinearizedPoly& g) {
    check_same(f, g);
    std::vector<Elem> c(f.n());
    for (unsigned i = 0; i < f.n(); ++i) c[i] = f.F_.sub(f.c_[i], g.c_[i]);
    return {f.F_, c};
}

LinearizedPoly operator*(Elem a, const LinearizedPoly& f) {
    std::vector<Elem> c(f.n());
    for (unsigned i = 0; i < f.n(); ++i) c[i] = f.F_.mul(a, f.c_[i]);
    return {f.F_, c};
}

} // namespace rankdens
