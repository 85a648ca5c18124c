#pragma once

#include "rankdens/gf.hpp"
#include "rankdens/matrix.hpp"

#include <vector>

namespace rankdens {

/// f = sum_{i<n} f_i x^(q^i) over F_{q^n}, reduced modulo x^(q^n) - x.
class LinearizedPoly {
public:
    LinearizedPoly() = default;
    LinearizedPoly(ExtField field, std::vector<Elem> coeffs);

    static LinearizedPoly zero(const ExtField& F);
    /// The polynomial x.
    static LinearizedPoly identity(const ExtField& F);
    /// a * x^(q^i)
    static LinearizedPoly monomial(const ExtField& F, unsigned i, Elem a);

    /// Inverse of to_matrix. `basis` defaults to the power basis.
    static LinearizedPoly from_matrix(const ExtField& F, const Matrix& M,
                                      const std::vector<Elem>& basis = {});

    const ExtField& field() const { return F_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(unsigned i) const { return c_[i]; }
    unsigned n() const { return static_cast<unsigned>(c_.size()); }
    bool is_zero() const;

    Elem evaluate(Elem a) const;

    /// Matrix of a -> f(a) over F_q. Column k holds the coordinates of f(b_k)
    /// in the basis b (power basis {1, t, ..., t^(n-1)} when omitted).
    Matrix to_matrix(const std::vector<Elem>& basis = {}) const;
    unsigned rank() const;

    LinearizedPoly adjoint() const;
    /// Apply x -> x^(p^r) to every coefficient.
    LinearizedPoly rho_twist(unsigned r) const;

    friend LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g);
    friend LinearizedPoly operator+(const LinearizedPoly& f, const LinearizedPoly& g);
    friend LinearizedPoly operator-(const LinearizedPoly& f, const LinearizedPoly& g);
    /// Scale by an element of F_{q^n}, i.e. (a*x) o f.
    friend LinearizedPoly operator*(Elem a, const LinearizedPoly& f);

    friend bool operator==(const LinearizedPoly& f, const LinearizedPoly& g) { return f.c_ == g.c_; }
    friend bool operator<(const LinearizedPoly& f, const LinearizedPoly& g) { return f.c_ < g.c_; }

private:
    ExtField F_;
    std::vector<Elem> c_;
};

/// Solve the square system A x = b over F_{q^n}; throws if A is singular.
std::vector<Elem> solve_ext(const ExtField& F, std::vector<std::vector<Elem>> A, std::vector<Elem> b);

} // namespace rankdens
