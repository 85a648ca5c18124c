#include "rankdens/semifield.hpp"

#include "rankdens/parallel.hpp"

#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rankdens {

// ---------------------------------------------------------------- LinPolyCode

LinPolyCode::LinPolyCode(const ExtField& F, const std::vector<LinearizedPoly>& gens) : F_(F) {
    std::vector<Matrix> mats;
    for (const auto& g : gens) mats.push_back(g.to_matrix());
    Field K = F.base();
    mc_ = MatrixCode::span(K, F.n(), F.n(), mats);
    for (const auto& M : mc_.basis_matrices()) basis_.push_back(LinearizedPoly::from_matrix(F, M));
}

std::vector<LinearizedPoly> LinPolyCode::elements() const {
    const unsigned q = F_.q(), k = dim();
    std::uint64_t total = ipow64(q, k);
    std::vector<LinearizedPoly> out;
    out.reserve(total);
    for (std::uint64_t t = 0; t < total; ++t) {
        LinearizedPoly f = LinearizedPoly::zero(F_);
        std::uint64_t v = t;
        for (unsigned i = 0; i < k; ++i) {
            Elem d = static_cast<Elem>(v % q);
            v /= q;
            if (d) f = f + F_.embed(d) * basis_[i];
        }
        out.push_back(f);
    }
    return out;
}

LinPolyCode LinPolyCode::twist(unsigned r) const {
    std::vector<LinearizedPoly> g;
    for (const auto& b : basis_) g.push_back(b.rho_twist(r));
    return {F_, g};
}

LinPolyCode LinPolyCode::compose_right(const LinearizedPoly& h) const {
    std::vector<LinearizedPoly> g;
    for (const auto& b : basis_) g.push_back(compose(b, h));
    return {F_, g};
}

LinPolyCode LinPolyCode::compose_left(const LinearizedPoly& h) const {
    std::vector<LinearizedPoly> g;
    for (const auto& b : basis_) g.push_back(compose(h, b));
    return {F_, g};
}

// ---------------------------------------------------------------- Semifield

Semifield::Semifield(ExtField F, std::vector<Elem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    if (c_.size() != std::size_t(F_.n()) * F_.n()) throw std::invalid_argument("need n*n coefficients");
}

Semifield Semifield::field_multiplication(const ExtField& F) {
    std::vector<Elem> c(std::size_t(F.n()) * F.n(), 0);
    c[0] = 1;
    return {F, c};
}

Elem Semifield::mul(Elem x, Elem y) const {
    const unsigned n = F_.n();
    Elem s = 0;
    for (unsigned i = 0; i < n; ++i) {
        Elem xi = 0;
        bool have = false;
        for (unsigned j = 0; j < n; ++j) {
            Elem c = c_[i * n + j];
            if (!c) continue;
            if (!have) {
                xi = F_.frobenius(x, i);
                have = true;
            }
            s = F_.add(s, F_.mul(c, F_.mul(xi, F_.frobenius(y, j))));
        }
    }
    return s;
}

LinearizedPoly Semifield::right_mult(Elem y) const {
    const unsigned n = F_.n();
    std::vector<Elem> r(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (c_[i * n + j]) r[i] = F_.add(r[i], F_.mul(c_[i * n + j], F_.frobenius(y, j)));
    return {F_, r};
}

std::vector<Elem> Semifield::table() const {
    const std::uint64_t Q = F_.order();
    std::vector<Elem> t(Q * Q);
    for (Elem y = 0; y < Q; ++y) {
        LinearizedPoly R = right_mult(y);
        for (Elem x = 0; x < Q; ++x) t[x * Q + y] = R.evaluate(x);
    }
    return t;
}

std::optional<Elem> Semifield::identity() const {
    const std::uint64_t Q = F_.order();
    auto t = table();
    for (Elem e = 1; e < Q; ++e) {
        bool ok = true;
        for (Elem x = 0; x < Q && ok; ++x) ok = t[e * Q + x] == x && t[x * Q + e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

bool is_presemifield(const Semifield& S, const Budget& budget) {
    const std::uint64_t Q = S.field().order();
    budget.require(BigInt(Q) * Q, "zero-divisor search");
    auto t = S.table();
    for (Elem x = 1; x < Q; ++x)
        for (Elem y = 1; y < Q; ++y)
            if (t[x * Q + y] == 0) return false;
    return true;
}

LinPolyCode semifield_to_code(const Semifield& S) {
    const ExtField& F = S.field();
    for (Elem y = 1; y < F.order(); ++y)
        if (S.right_mult(y).rank() != F.n()) throw std::invalid_argument("multiplication has zero divisors");
    std::vector<LinearizedPoly> gens;
    for (unsigned k = 0; k < F.n(); ++k) gens.push_back(S.right_mult(F.basis(k)));
    return {F, gens};
}

std::optional<LinearizedPoly> first_invertible(const LinPolyCode& C) {
    for (const auto& f : C.elements())
        if (!f.is_zero() && f.rank() == C.n()) return f;
    return std::nullopt;
}

LinPolyCode normalize_contains_x(const LinPolyCode& C) {
    auto g = first_invertible(C);
    if (!g) throw std::invalid_argument("code has no invertible element");
    const Field& K = C.field().base();
    auto inv = inverse(K, g->to_matrix());
    return C.compose_right(LinearizedPoly::from_matrix(C.field(), *inv));
}

Semifield code_to_semifield(const LinPolyCode& C) {
    const ExtField& F = C.field();
    const Field& K = F.base();
    const unsigned n = F.n();
    if (C.dim() != n) throw std::invalid_argument("code must have dimension n");
    if (!C.contains(LinearizedPoly::identity(F))) throw std::invalid_argument("code must contain x");
    if (min_distance(C.matrix_code()) != n) throw std::invalid_argument("code is not full-rank MRD");
    // V: column k = coordinates of P_k(1)
    Matrix V(n, n);
    for (unsigned k = 0; k < n; ++k) {
        auto col = F.coords(C.basis()[k].evaluate(1));
        for (unsigned r = 0; r < n; ++r) V(r, k) = col[r];
    }
    auto Vinv = inverse(K, V);
    if (!Vinv) throw std::logic_error("evaluation at 1 is not bijective");
    // L(t^r) = sum_k Vinv(k, r) P_k
    std::vector<LinearizedPoly> L;
    for (unsigned r = 0; r < n; ++r) {
        LinearizedPoly f = LinearizedPoly::zero(F);
        for (unsigned k = 0; k < n; ++k)
            if ((*Vinv)(k, r)) f = f + F.embed((*Vinv)(k, r)) * C.basis()[k];
        L.push_back(f);
    }
    // the i-th coefficient of L(y) is F_q-linear in y; recover it as a q-polynomial
    std::vector<Elem> c(std::size_t(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        Matrix M(n, n);
        for (unsigned r = 0; r < n; ++r) {
            auto col = F.coords(L[r].coeff(i));
            for (unsigned s = 0; s < n; ++s) M(s, r) = col[s];
        }
        auto li = LinearizedPoly::from_matrix(F, M);
        for (unsigned j = 0; j < n; ++j) c[i * n + j] = li.coeff(j);
    }
    return {F, c};
}

// ---------------------------------------------------------------- twisted fields

nlohmann::ordered_json TwistedFieldSpec::to_json() const {
    nlohmann::ordered_json j;
    j["q"] = q;
    j["n"] = n;
    j["l"] = l;
    j["i"] = i;
    j["j"] = this->j;
    j["c_coords"] = c_coords;
    return j;
}

TwistedFieldSpec TwistedFieldSpec::from_json(const nlohmann::json& j) {
    TwistedFieldSpec s;
    s.q = j.at("q").get<unsigned>();
    s.n = j.at("n").get<unsigned>();
    s.l = j.at("l").get<unsigned>();
    s.i = j.at("i").get<unsigned>();
    s.j = j.at("j").get<unsigned>();
    s.c_coords = j.at("c_coords").get<std::vector<Elem>>();
    return s;
}

TwistedFieldSpec make_twisted_spec(const ExtField& F, unsigned i, unsigned j, Elem c) {
    TwistedFieldSpec s;
    s.q = F.q();
    s.n = F.n();
    s.i = i % F.n();
    s.j = j % F.n();
    s.l = std::gcd(std::gcd(s.i, s.j), s.n);
    s.c_coords = F.coords(c);
    return s;
}

void validate(const TwistedFieldSpec& s, const ExtField& F) {
    if (s.q != F.q() || s.n != F.n()) throw std::invalid_argument("spec does not match the field");
    if (s.c_coords.size() != s.n) throw std::invalid_argument("c has the wrong number of coordinates");
    if (s.i >= s.n || s.j >= s.n) throw std::invalid_argument("exponents must lie in [0, n)");
    unsigned g = std::gcd(std::gcd(s.i, s.j), s.n);
    if (s.l != g) throw std::invalid_argument("Fix(alpha) and Fix(beta) do not meet in F_{q^l}");
    Elem c = F.from_coords(s.c_coords);
    if (F.rel_norm(c, s.l) == 1) throw std::invalid_argument("norm of c is 1");
}

Semifield twisted_semifield(const TwistedFieldSpec& s, const ExtField& F) {
    validate(s, F);
    Elem c = F.from_coords(s.c_coords);
    std::vector<Elem> co(std::size_t(s.n) * s.n, 0);
    co[0] = 1;
    co[s.i * s.n + s.j] = F.sub(co[s.i * s.n + s.j], c);
    return {F, co};
}

LinPolyCode twisted_code(const TwistedFieldSpec& s, const ExtField& F) {
    return semifield_to_code(twisted_semifield(s, F));
}

LinPolyCode c0_code(const ExtField& F) { return semifield_to_code(Semifield::field_multiplication(F)); }

BigInt class_count_formula(unsigned n, const BigInt& q) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    return 1 + (q - 2) * binomial(n - 1, 2);
}

bool equiv_to_c0_predicate(const TwistedFieldSpec& s, const ExtField& F) {
    validate(s, F);
    bool c_zero = true;
    for (auto e : s.c_coords) c_zero = c_zero && e == 0;
    return c_zero || s.i % s.n == 0 || s.j % s.n == 0 || s.i % s.n == s.j % s.n;
}

// ---------------------------------------------------------------- equivalence search

std::vector<Matrix> general_linear_group(const Field& K, unsigned n, const Budget& budget) {
    const unsigned q = K.q();
    BigInt total = ipow(q, n * n);
    budget.require(total, "general linear group enumeration");
    std::vector<Matrix> out;
    std::uint64_t T = static_cast<std::uint64_t>(total);
    Matrix M(n, n);
    for (std::uint64_t t = 0; t < T; ++t) {
        std::uint64_t v = t;
        for (auto& e : M.a) {
            e = static_cast<Elem>(v % q);
            v /= q;
        }
        if (det(K, M) != 0) out.push_back(M);
    }
    return out;
}

namespace {

// allocation-free n x n products for the inner loops
struct SmallOps {
    const Field& K;
    unsigned n;

    void mul(const Elem* x, const Elem* y, Elem* out) const {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                Elem s = 0;
                for (unsigned k = 0; k < n; ++k) {
                    Elem a = x[i * n + k];
                    if (a) s = K.add(s, K.mul(a, y[k * n + j]));
                }
                out[i * n + j] = s;
            }
    }

    // membership of a flat vector in the code with RREF basis B and pivots P
    bool member(const Matrix& B, const std::vector<unsigned>& P, const Elem* v, Elem* work) const {
        const unsigned len = n * n;
        for (unsigned x = 0; x < len; ++x) work[x] = v[x];
        for (unsigned r = 0; r < B.rows; ++r) {
            Elem c = work[P[r]];
            if (!c) continue;
            Elem t = K.neg(c);
            const Elem* row = &B.a[std::size_t(r) * len];
            for (unsigned x = 0; x < len; ++x)
                if (row[x]) work[x] = K.add(work[x], K.mul(t, row[x]));
        }
        for (unsigned x = 0; x < len; ++x)
            if (work[x]) return false;
        return true;
    }
};

std::vector<Matrix> invertible_elements(const LinPolyCode& C) {
    std::vector<Matrix> out;
    const Field& K = C.field().base();
    for (const auto& f : C.elements()) {
        if (f.is_zero()) continue;
        Matrix M = f.to_matrix();
        if (rank(K, M) == C.n()) out.push_back(M);
    }
    return out;
}

// Number of (F, rho, G) with F C2^rho G = C1, or just whether one exists.
BigInt search(const LinPolyCode& C1, const LinPolyCode& C2, bool count_all, const Budget& budget,
              unsigned jobs, SearchMode mode) {
    if (C1.field().order() != C2.field().order() || C1.n() != C2.n())
        throw std::invalid_argument("codes live over different fields");
    if (C1.dim() != C2.dim()) return 0;
    const Field& K = C1.field().base();
    const unsigned n = C1.n();
    const unsigned h = K.h();
    const unsigned len = n * n;
    auto gl = general_linear_group(K, n, budget);
    std::vector<Matrix> gl_inv;
    gl_inv.reserve(gl.size());
    for (const auto& M : gl) gl_inv.push_back(*inverse(K, M));
    auto inv1 = invertible_elements(C1);

    const Matrix& B1 = C1.matrix_code().space().basis;
    const std::vector<unsigned>& P1 = C1.matrix_code().space().pivots;
    SmallOps ops{K, n};

    BigInt total = 0;
    std::atomic<bool> found{false};
    for (unsigned rho = 0; rho < h; ++rho) {
        if (!count_all && found) break;
        LinPolyCode T = C2.twist(rho);
        auto Bs = T.matrix_code().basis_matrices();
        std::optional<Matrix> c0inv;
        SearchMode m = mode;
        if (m == SearchMode::anchored) {
            auto c0 = first_invertible(T);
            if (c0) c0inv = inverse(K, c0->to_matrix());
            else m = SearchMode::exhaustive;
        }
        if (m == SearchMode::anchored)
            budget.require(BigInt(gl.size()) * inv1.size() * h, "anchored equivalence search");
        else
            budget.require(BigInt(gl.size()) * gl.size() * h, "exhaustive equivalence search");

        auto part = run_chunks<std::uint64_t>(gl.size(), jobs, [&](Range r) {
            std::uint64_t cnt = 0;
            std::vector<Elem> FB(Bs.size() * len), tmp(len), G(len), X(len), work(len);
            auto test = [&](const Elem* g) {
                for (std::size_t i = 0; i < Bs.size(); ++i) {
                    ops.mul(&FB[i * len], g, X.data());
                    if (!ops.member(B1, P1, X.data(), work.data())) return false;
                }
                return true;
            };
            for (std::uint64_t fi = r.begin; fi < r.end; ++fi) {
                if (!count_all && found) break;
                const Matrix& F = gl[fi];
                for (std::size_t i = 0; i < Bs.size(); ++i) ops.mul(F.a.data(), Bs[i].a.data(), &FB[i * len]);
                if (m == SearchMode::anchored) {
                    ops.mul(c0inv->a.data(), gl_inv[fi].a.data(), tmp.data());
                    for (const auto& cp : inv1) {
                        ops.mul(tmp.data(), cp.a.data(), G.data());
                        if (test(G.data())) {
                            ++cnt;
                            if (!count_all) {
                                found = true;
                                break;
                            }
                        }
                    }
                } else {
                    for (const auto& Gm : gl) {
                        if (test(Gm.a.data())) {
                            ++cnt;
                            if (!count_all) {
                                found = true;
                                break;
                            }
                        }
                    }
                }
            }
            return cnt;
        });
        for (auto c : part) total += c;
    }
    return total;
}

} // namespace

bool is_equivalent_bruteforce(const LinPolyCode& C1, const LinPolyCode& C2, const Budget& budget,
                              unsigned jobs, SearchMode mode) {
    if (C1 == C2) return true;
    return search(C1, C2, false, budget, jobs, mode) > 0;
}

BigInt aut_group_size_bruteforce(const LinPolyCode& C, const Budget& budget, unsigned jobs, SearchMode mode) {
    return search(C, C, true, budget, jobs, mode);
}

// ---------------------------------------------------------------- idealizers and nuclei

Idealizers idealizers(const LinPolyCode& C) {
    const Field& K = C.field().base();
    const unsigned n = C.n(), len = n * n;
    auto Bs = C.matrix_code().basis_matrices();
    Matrix H = nullspace(K, C.matrix_code().space().basis); // rows span the dual code
    // unknown F(r,s) sits at column r*n + s
    std::vector<std::vector<Elem>> left, right, cent;
    for (const auto& B : Bs) {
        for (unsigned h = 0; h < H.rows; ++h) {
            std::vector<Elem> L(len, 0), R(len, 0);
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c) {
                    Elem hv = H(h, r * n + c);
                    if (!hv) continue;
                    for (unsigned s = 0; s < n; ++s) {
                        // (F B)(r,c) = sum_s F(r,s) B(s,c)
                        L[r * n + s] = K.add(L[r * n + s], K.mul(hv, B(s, c)));
                        // (B F)(r,c) = sum_s B(r,s) F(s,c)
                        R[s * n + c] = K.add(R[s * n + c], K.mul(hv, B(r, s)));
                    }
                }
            left.push_back(L);
            right.push_back(R);
        }
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                std::vector<Elem> E(len, 0);
                for (unsigned s = 0; s < n; ++s) {
                    E[r * n + s] = K.add(E[r * n + s], B(s, c));
                    E[s * n + c] = K.sub(E[s * n + c], B(r, s));
                }
                cent.push_back(E);
            }
    }
    auto dim_of = [&](const std::vector<std::vector<Elem>>& rows) {
        if (rows.empty()) return len;
        Matrix M(static_cast<unsigned>(rows.size()), len);
        for (unsigned i = 0; i < rows.size(); ++i)
            std::copy(rows[i].begin(), rows[i].end(), M.a.begin() + std::ptrdiff_t(i) * len);
        return len - rank(K, M);
    };
    Idealizers I;
    I.q = K.q();
    I.left_dim = dim_of(left);
    I.right_dim = dim_of(right);
    I.centralizer_dim = dim_of(cent);
    auto both = left;
    both.insert(both.end(), cent.begin(), cent.end());
    I.center_dim = dim_of(both);
    return I;
}

Nuclei nuclei(const Semifield& S, const Budget& budget) {
    const std::uint64_t Q = S.field().order();
    budget.require(BigInt(Q) * Q * Q, "nucleus search");
    auto t = S.table();
    auto m = [&](Elem x, Elem y) { return t[x * Q + y]; };
    std::vector<bool> nl(Q, true), nm(Q, true), nr(Q, true);
    for (Elem a = 0; a < Q; ++a)
        for (Elem x = 0; x < Q; ++x)
            for (Elem y = 0; y < Q; ++y) {
                if (nl[a] && m(m(a, x), y) != m(a, m(x, y))) nl[a] = false;
                if (nm[a] && m(m(x, a), y) != m(x, m(a, y))) nm[a] = false;
                if (nr[a] && m(m(x, y), a) != m(x, m(y, a))) nr[a] = false;
            }
    Nuclei N;
    for (Elem a = 0; a < Q; ++a) {
        N.left += nl[a] ? 1 : 0;
        N.middle += nm[a] ? 1 : 0;
        N.right += nr[a] ? 1 : 0;
        bool nuc = nl[a] && nm[a] && nr[a];
        N.nucleus += nuc;
        if (nuc) {
            bool comm = true;
            for (Elem x = 0; x < Q && comm; ++x) comm = m(a, x) == m(x, a);
            N.center += comm;
        }
    }
    return N;
}

// ---------------------------------------------------------------- census

nlohmann::ordered_json Census::to_json() const {
    nlohmann::ordered_json j;
    j["q"] = q;
    j["n"] = n;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : classes) {
        nlohmann::ordered_json e;
        e["spec"] = c.representative.to_json();
        e["aut_size"] = c.aut_size.str();
        e["distinct_codes"] = c.members.str();
        e["equivalent_to_c0"] = c.equivalent_to_c0;
        arr.push_back(e);
    }
    j["classes"] = arr;
    j["orbit_sum"] = to_string(orbit_sum);
    return j;
}

Census twisted_census(unsigned q, unsigned n, const Budget& budget, unsigned jobs) {
    ExtField F(Field::of_order(q), n);
    std::map<LinPolyCode, TwistedFieldSpec> codes;
    std::vector<LinPolyCode> order;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (Elem c = 0; c < F.order(); ++c) {
                auto s = make_twisted_spec(F, i, j, c);
                if (F.rel_norm(c, s.l) == 1) continue;
                auto C = twisted_code(s, F);
                if (codes.emplace(C, s).second) order.push_back(C);
            }
    struct Rep {
        LinPolyCode code;
        std::pair<unsigned, unsigned> inv;
        std::size_t cls;
    };
    std::vector<Rep> reps;
    Census out;
    out.q = q;
    out.n = n;
    for (const auto& C : order) {
        auto I = idealizers(C);
        // centralizer and center move under equivalence, the idealizers do not
        auto key = std::make_pair(I.left_dim, I.right_dim);
        std::optional<std::size_t> cls;
        for (const auto& r : reps) {
            if (r.inv != key) continue;
            if (is_equivalent_bruteforce(r.code, C, budget, jobs)) {
                cls = r.cls;
                break;
            }
        }
        if (!cls) {
            CensusClass cc;
            cc.representative = codes.at(C);
            cc.members = 0;
            out.classes.push_back(cc);
            cls = out.classes.size() - 1;
            reps.push_back({C, key, *cls});
        }
        out.classes[*cls].members += 1;
    }
    LinPolyCode c0 = c0_code(F);
    BigInt gl = gl_order(n, q);
    const unsigned h = F.base().h();
    out.orbit_sum = 0;
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
        auto& cc = out.classes[k];
        cc.aut_size = aut_group_size_bruteforce(reps[k].code, budget, jobs);
        cc.equivalent_to_c0 = reps[k].code == c0 || is_equivalent_bruteforce(reps[k].code, c0, budget, jobs);
        out.orbit_sum += Rational(gl * gl * h, cc.aut_size);
    }
    return out;
}

} // namespace rankdens
