#pragma once

#include "rankdens/numeric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace rankdens {

/// Field elements are plain integers. In F_q = F_p[x]/(m(x)) the integer's
/// base-p digits are the coordinates in the power basis, constant term first;
/// in F_{q^n} the base-q digits are the coordinates over F_q.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxTableOrder = 1024;
inline constexpr std::uint64_t kMaxExtOrder = 1u << 20;

bool is_prime(std::uint64_t n);

struct PrimePower {
    unsigned p = 0;
    unsigned h = 0;
    unsigned q = 0;

    /// Throws std::invalid_argument unless q is a prime power.
    static PrimePower of(std::uint64_t q);
    static std::optional<PrimePower> try_of(std::uint64_t q);
};

class ExtField;

/// F_q with full addition and multiplication tables (q <= 1024).
class Field {
public:
    Field() = default;

    static Field make(unsigned p, unsigned h);
    static Field of_order(std::uint64_t q);

    const PrimePower& pp() const { return t_->pp; }
    unsigned q() const { return t_->pp.q; }
    unsigned p() const { return t_->pp.p; }
    unsigned h() const { return t_->pp.h; }

    Elem add(Elem a, Elem b) const { return t_->add[a * t_->pp.q + b]; }
    Elem mul(Elem a, Elem b) const { return t_->mul[a * t_->pp.q + b]; }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^(p^r), the r-th power of the absolute Frobenius.
    Elem frobenius_p(Elem a, unsigned r) const;

    /// Modulus over F_p used to build the table (empty for prime fields).
    const std::vector<Elem>& modulus() const { return t_->modulus; }

    bool operator==(const Field& o) const { return q() == o.q(); }

private:
    friend class ExtField;
    struct Tables {
        PrimePower pp;
        std::vector<std::uint16_t> add, mul;
        std::vector<Elem> neg, inv;
        std::vector<Elem> modulus;
    };
    std::shared_ptr<const Tables> t_;
};

/// F_{q^n} built over a table field F_q, with log/exp tables (q^n <= 2^20).
class ExtField {
public:
    ExtField() = default;
    ExtField(const Field& base, unsigned n);

    const Field& base() const { return d_->base; }
    unsigned n() const { return d_->n; }
    unsigned q() const { return d_->base.q(); }
    std::uint64_t order() const { return d_->order; }
    /// Monic irreducible modulus, coefficients constant term first (n+1 entries).
    const std::vector<Elem>& modulus() const { return d_->modulus; }
    Elem primitive() const { return d_->exp[1 % d_->exp.size()]; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = std::uint64_t(d_->log[a]) + d_->log[b];
        std::uint64_t m = d_->order - 1;
        return d_->exp[s >= m ? s - m : s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, const BigInt& e) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Discrete log base the primitive element; a must be nonzero.
    std::uint32_t log(Elem a) const { return d_->log[a]; }
    Elem exp(std::uint64_t k) const { return d_->exp[k % (d_->order - 1)]; }

    /// a^(q^i)
    Elem frobenius(Elem a, unsigned i) const;
    /// a^(p^r), extending the absolute Frobenius of the base field.
    Elem frobenius_p(Elem a, unsigned r) const;
    /// N_{q^n/q^l}(a) = a^((q^n-1)/(q^l-1)); l must divide n.
    Elem rel_norm(Elem a, unsigned l) const;
    /// Tr_{q^n/q}(a), returned as an element of the base field.
    Elem trace(Elem a) const;
    bool in_subfield(Elem a, unsigned l) const { return frobenius(a, l) == a; }

    /// Multiply by a base field scalar.
    Elem scale(Elem lambda, Elem a) const { return mul(embed(lambda), a); }
    /// The base field sits inside as constant polynomials.
    Elem embed(Elem lambda) const { return lambda; }
    /// t^k where t is the root of the modulus; 0 <= k < n.
    Elem basis(unsigned k) const { return static_cast<Elem>(ipow64(q(), k)); }

    std::vector<Elem> coords(Elem a) const;
    Elem from_coords(const std::vector<Elem>& c) const;

    /// View this field as a table field (requires order <= 1024).
    Field as_field() const;

private:
    struct Data {
        Field base;
        unsigned n = 0;
        std::uint64_t order = 0;
        std::vector<Elem> modulus;
        std::vector<Elem> exp;
        std::vector<std::uint32_t> log;
        std::vector<std::int64_t> zech; // log(1 + g^k), -1 when 1 + g^k = 0
    };
    std::shared_ptr<const Data> d_;
};

/// First monic irreducible polynomial of degree n over F_q, ordering monic
/// polynomials by the integer sum c_i q^i of their lower coefficients.
std::vector<Elem> first_irreducible(const Field& f, unsigned n);

bool is_irreducible(const Field& f, const std::vector<Elem>& poly);

} // namespace rankdens
