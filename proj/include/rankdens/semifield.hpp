#pragma once

#include "rankdens/codes.hpp"
#include "rankdens/gf.hpp"
#include "rankdens/linpoly.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace rankdens {

/// F_q-subspace of L_{n,q}. The basis is canonical: it is read back from the
/// RREF of the matrix images, so equal codes have equal bases.
class LinPolyCode {
public:
    LinPolyCode() = default;
    LinPolyCode(const ExtField& F, const std::vector<LinearizedPoly>& gens);

    const ExtField& field() const { return F_; }
    unsigned n() const { return F_.n(); }
    unsigned dim() const { return mc_.dim(); }
    const std::vector<LinearizedPoly>& basis() const { return basis_; }
    const MatrixCode& matrix_code() const { return mc_; }

    bool contains(const LinearizedPoly& f) const { return mc_.contains(f.to_matrix()); }
    /// All q^k elements; coefficient vectors run as a base-q counter with the
    /// first basis element least significant.
    std::vector<LinearizedPoly> elements() const;
    /// The code {f^rho}, rho: x -> x^(p^r) on coefficients.
    LinPolyCode twist(unsigned r) const;
    /// {f o g | f in C}
    LinPolyCode compose_right(const LinearizedPoly& g) const;
    LinPolyCode compose_left(const LinearizedPoly& f) const;

    friend bool operator==(const LinPolyCode& a, const LinPolyCode& b) { return a.mc_ == b.mc_; }
    friend bool operator<(const LinPolyCode& a, const LinPolyCode& b) { return a.mc_ < b.mc_; }

private:
    ExtField F_;
    MatrixCode mc_;
    std::vector<LinearizedPoly> basis_;
};

/// x * y = sum c_ij x^(q^i) y^(q^j) on F_{q^n}.
class Semifield {
public:
    Semifield() = default;
    Semifield(ExtField F, std::vector<Elem> coeffs); // n*n entries, row i, column j

    static Semifield field_multiplication(const ExtField& F);

    const ExtField& field() const { return F_; }
    unsigned n() const { return F_.n(); }
    Elem coeff(unsigned i, unsigned j) const { return c_[i * n() + j]; }
    const std::vector<Elem>& coeffs() const { return c_; }

    Elem mul(Elem x, Elem y) const;
    /// R_y = x -> x * y as a linearized polynomial.
    LinearizedPoly right_mult(Elem y) const;
    /// Full multiplication table, row x, column y.
    std::vector<Elem> table() const;
    /// Two-sided identity, if any.
    std::optional<Elem> identity() const;

private:
    ExtField F_;
    std::vector<Elem> c_;
};

bool is_presemifield(const Semifield& S, const Budget& budget);

/// phi: {R_y | y in F_{q^n}}. Throws if S has zero divisors.
LinPolyCode semifield_to_code(const Semifield& S);

/// Psi: x * y = L(y)(x), where L(y) is the element of C taking 1 to y.
/// C must contain x and have every nonzero element invertible.
Semifield code_to_semifield(const LinPolyCode& C);

/// First invertible element of C in elements() order.
std::optional<LinearizedPoly> first_invertible(const LinPolyCode& C);

/// C o g^-1 for g = first_invertible(C); the result contains x.
LinPolyCode normalize_contains_x(const LinPolyCode& C);

/// x * y = xy - c x^(q^i) y^(q^j), with Fix(alpha) and Fix(beta) meeting in F_{q^l}.
struct TwistedFieldSpec {
    unsigned q = 0, n = 0, l = 0, i = 0, j = 0;
    std::vector<Elem> c_coords; // c over F_q in the power basis

    nlohmann::ordered_json to_json() const;
    static TwistedFieldSpec from_json(const nlohmann::json& j);
};

/// Build a spec with l = gcd(i, j, n) and c given as a field element.
TwistedFieldSpec make_twisted_spec(const ExtField& F, unsigned i, unsigned j, Elem c);
/// Throws std::invalid_argument when l != gcd(i,j,n) or N_{q^n/q^l}(c) = 1.
void validate(const TwistedFieldSpec& spec, const ExtField& F);
Semifield twisted_semifield(const TwistedFieldSpec& spec, const ExtField& F);
/// C_{c,alpha,beta} = {xy - c alpha(x) beta(y) | y}
LinPolyCode twisted_code(const TwistedFieldSpec& spec, const ExtField& F);
/// {yx | y}
LinPolyCode c0_code(const ExtField& F);

enum class SearchMode {
    /// For codes with an invertible element: the second factor is forced once
    /// the first factor and the image of one fixed invertible codeword are
    /// chosen. Exact, no theory assumed.
    anchored,
    /// Every pair of invertible matrices.
    exhaustive,
};

/// Is there (f, g, rho) with C1 = f o C2^rho o g?
bool is_equivalent_bruteforce(const LinPolyCode& C1, const LinPolyCode& C2, const Budget& budget,
                              unsigned jobs = 1, SearchMode mode = SearchMode::anchored);

/// Number of triples (f, rho, g) with f o C^rho o g = C.
BigInt aut_group_size_bruteforce(const LinPolyCode& C, const Budget& budget, unsigned jobs = 1,
                                 SearchMode mode = SearchMode::anchored);

/// All invertible n x n matrices over the field, in integer order of the flat entries.
std::vector<Matrix> general_linear_group(const Field& K, unsigned n, const Budget& budget);

struct Idealizers {
    unsigned left_dim = 0, right_dim = 0, centralizer_dim = 0, center_dim = 0;
    unsigned q = 0;
    BigInt size(unsigned dim) const { return ipow(q, dim); }
};
/// Dimensions over F_q, found by solving the linear membership conditions.
Idealizers idealizers(const LinPolyCode& C);

struct Nuclei {
    BigInt left, middle, right, nucleus, center;
};
Nuclei nuclei(const Semifield& S, const Budget& budget);

/// 1 + (q - 2) C(n-1, 2)
BigInt class_count_formula(unsigned n, const BigInt& q);
/// alpha or beta trivial, or alpha = beta (or c = 0, which gives field multiplication).
bool equiv_to_c0_predicate(const TwistedFieldSpec& spec, const ExtField& F);

struct CensusClass {
    TwistedFieldSpec representative;
    BigInt aut_size;
    BigInt members; // distinct codes among the enumerated specs
    bool equivalent_to_c0 = false;
};

struct Census {
    unsigned q = 0, n = 0;
    std::vector<CensusClass> classes;
    /// sum over classes of |GL_n(q)|^2 h / |Aut|
    Rational orbit_sum;

    nlohmann::ordered_json to_json() const;
};

/// Classify every valid twisted-field code over F_{q^n} up to equivalence.
Census twisted_census(unsigned q, unsigned n, const Budget& budget, unsigned jobs = 1);

} // namespace rankdens
