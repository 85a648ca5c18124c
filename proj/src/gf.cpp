#include "rankdens/gf.hpp"

#include <stdexcept>
#include <string>

namespace rankdens {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<PrimePower> PrimePower::try_of(std::uint64_t q) {
    if (q < 2 || q > (1ull << 31)) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned h = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++h;
    }
    if (r != 1) return std::nullopt;
    return PrimePower{static_cast<unsigned>(p), h, static_cast<unsigned>(q)};
}

PrimePower PrimePower::of(std::uint64_t q) {
    auto pp = try_of(q);
    if (!pp) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return *pp;
}

namespace {

using Poly = std::vector<Elem>;

void trim(const Field& f, Poly& a) {
    (void)f;
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic-or-not b (b nonzero, trimmed)
Poly poly_mod(const Field& f, Poly a, const Poly& b) {
    trim(f, a);
    Elem lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        Elem c = f.mul(a.back(), lead_inv);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] = f.sub(a[off + i], f.mul(c, b[i]));
        trim(f, a);
    }
    return a;
}

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return poly_mod(f, std::move(r), m);
}

Poly poly_powmod(const Field& f, Poly a, std::uint64_t e, const Poly& m) {
    Poly r{1};
    a = poly_mod(f, a, m);
    while (e) {
        if (e & 1u) r = poly_mulmod(f, r, a, m);
        e >>= 1u;
        if (e) a = poly_mulmod(f, a, a, m);
    }
    return r;
}

Poly decode(std::uint64_t v, unsigned q, unsigned len) {
    Poly c(len);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = static_cast<Elem>(v % q);
        v /= q;
    }
    return c;
}

std::uint64_t encode(const Poly& c, unsigned q) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * q + c[i];
    return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_irreducible(const Field& f, const std::vector<Elem>& poly) {
    Poly m = poly;
    trim(f, m);
    if (m.empty()) return false;
    unsigned n = static_cast<unsigned>(m.size() - 1);
    if (n == 0) return false;
    if (n == 1) return true;
    if (n > 16) throw std::invalid_argument("irreducibility test limited to degree <= 16");
    // trial division by every monic polynomial of degree 1..n/2
    unsigned q = f.q();
    for (unsigned d = 1; d <= n / 2; ++d) {
        std::uint64_t count = ipow64(q, d);
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g = decode(v, q, d);
            g.push_back(1);
            if (poly_mod(f, m, g).empty()) return false;
        }
    }
    return true;
}

std::vector<Elem> first_irreducible(const Field& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("degree must be positive");
    std::uint64_t count = ipow64(f.q(), n);
    for (std::uint64_t v = 0; v < count; ++v) {
        Poly g = decode(v, f.q(), n);
        g.push_back(1);
        if (is_irreducible(f, g)) return g;
    }
    throw std::logic_error("no irreducible polynomial found");
}

// ---------------------------------------------------------------- Field

Field Field::make(unsigned p, unsigned h) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
    if (h == 0) throw std::invalid_argument("field exponent must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q > kMaxTableOrder)
            throw std::invalid_argument("field order exceeds table limit " +
                                        std::to_string(kMaxTableOrder));
    }
    if (h == 1) {
        auto t = std::make_shared<Tables>();
        t->pp = PrimePower{p, 1, p};
        t->add.resize(q * q);
        t->mul.resize(q * q);
        t->neg.resize(q);
        t->inv.assign(q, 0);
        for (unsigned a = 0; a < q; ++a) {
            t->neg[a] = (p - a) % p;
            for (unsigned b = 0; b < q; ++b) {
                t->add[a * q + b] = static_cast<std::uint16_t>((a + b) % p);
                t->mul[a * q + b] = static_cast<std::uint16_t>((a * b) % p);
                if ((a * b) % p == 1) t->inv[a] = b;
            }
        }
        Field f;
        f.t_ = t;
        return f;
    }
    return ExtField(make(p, 1), h).as_field();
}

Field Field::of_order(std::uint64_t q) {
    PrimePower pp = PrimePower::of(q);
    return make(pp.p, pp.h);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return t_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1u) r = mul(r, a);
        e >>= 1u;
        if (e) a = mul(a, a);
    }
    return r;
}

Elem Field::frobenius_p(Elem a, unsigned r) const {
    for (unsigned i = 0; i < r % h(); ++i) a = pow(a, p());
    return a;
}

// ---------------------------------------------------------------- ExtField

ExtField::ExtField(const Field& base, unsigned n) {
    if (n == 0) throw std::invalid_argument("extension degree must be positive");
    auto d = std::make_shared<Data>();
    d->base = base;
    d->n = n;
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n; ++i) {
        order *= base.q();
        if (order > kMaxExtOrder)
            throw std::invalid_argument("extension field order exceeds limit " +
                                        std::to_string(kMaxExtOrder));
    }
    d->order = order;
    d->modulus = first_irreducible(base, n);

    // smallest element (in integer order) generating the multiplicative group
    const Poly& m = d->modulus;
    auto factors = prime_factors(order - 1);
    Poly gen;
    for (std::uint64_t v = 1; v < order; ++v) {
        Poly g = decode(v, base.q(), n);
        bool ok = true;
        for (auto r : factors) {
            Poly e = poly_powmod(base, g, (order - 1) / r, m);
            if (e.size() == 1 && e[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            trim(base, gen);
            break;
        }
    }
    d->exp.resize(order - 1);
    d->log.assign(order, 0);
    Poly cur{1};
    for (std::uint64_t k = 0; k + 1 < order; ++k) {
        Poly full = cur;
        full.resize(n, 0);
        Elem v = static_cast<Elem>(encode(full, base.q()));
        d->exp[k] = v;
        d->log[v] = static_cast<std::uint32_t>(k);
        cur = poly_mulmod(base, cur, gen, m);
    }
    if (base.p() != 2) {
        d->zech.assign(order - 1, -1);
        for (std::uint64_t k = 0; k + 1 < order; ++k) {
            Poly c = decode(d->exp[k], base.q(), n);
            c[0] = base.add(c[0], 1);
            std::uint64_t v = encode(c, base.q());
            d->zech[k] = v == 0 ? -1 : static_cast<std::int64_t>(d->log[v]);
        }
    }
    d_ = d;
}

Elem ExtField::add(Elem a, Elem b) const {
    if (d_->base.p() == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint64_t m = d_->order - 1;
    std::uint64_t la = d_->log[a], lb = d_->log[b];
    std::uint64_t k = lb >= la ? lb - la : lb + m - la;
    std::int64_t z = d_->zech[k];
    if (z < 0) return 0;
    std::uint64_t s = la + static_cast<std::uint64_t>(z);
    return d_->exp[s >= m ? s - m : s];
}

Elem ExtField::neg(Elem a) const {
    if (a == 0 || d_->base.p() == 2) return a;
    // -1 = g^((order-1)/2) for odd characteristic
    std::uint64_t m = d_->order - 1;
    std::uint64_t s = d_->log[a] + m / 2;
    return d_->exp[s >= m ? s - m : s];
}

Elem ExtField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::uint64_t m = d_->order - 1;
    std::uint64_t l = d_->log[a];
    return d_->exp[l == 0 ? 0 : m - l];
}

Elem ExtField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t m = d_->order - 1;
    unsigned __int128 s = static_cast<unsigned __int128>(d_->log[a]) * (e % m);
    return d_->exp[static_cast<std::uint64_t>(s % m)];
}

Elem ExtField::pow(Elem a, const BigInt& e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    BigInt m = d_->order - 1;
    BigInt r = e % m;
    return pow(a, static_cast<std::uint64_t>(r));
}

Elem ExtField::frobenius(Elem a, unsigned i) const {
    if (a == 0) return 0;
    std::uint64_t m = d_->order - 1;
    std::uint64_t e = 1;
    for (unsigned k = 0; k < i % d_->n; ++k) e = (e * q()) % m;
    return pow(a, e);
}

Elem ExtField::frobenius_p(Elem a, unsigned r) const {
    unsigned total = d_->base.h() * d_->n;
    for (unsigned k = 0; k < r % total; ++k) a = pow(a, std::uint64_t(d_->base.p()));
    return a;
}

Elem ExtField::rel_norm(Elem a, unsigned l) const {
    if (l == 0 || d_->n % l != 0)
        throw std::invalid_argument("norm degree must divide the extension degree");
    BigInt e = (BigInt(d_->order) - 1) / (ipow(q(), l) - 1);
    return pow(a, e);
}

Elem ExtField::trace(Elem a) const {
    Elem s = 0;
    for (unsigned i = 0; i < d_->n; ++i) s = add(s, frobenius(a, i));
    return s; // lies in F_q, which is encoded by the constants < q
}

std::vector<Elem> ExtField::coords(Elem a) const { return decode(a, q(), d_->n); }

Elem ExtField::from_coords(const std::vector<Elem>& c) const {
    if (c.size() != d_->n) throw std::invalid_argument("coordinate vector has wrong length");
    return static_cast<Elem>(encode(c, q()));
}

Field ExtField::as_field() const {
    if (d_->order > kMaxTableOrder)
        throw std::invalid_argument("field order exceeds table limit");
    auto t = std::make_shared<Field::Tables>();
    unsigned q = static_cast<unsigned>(d_->order);
    t->pp = PrimePower{d_->base.p(), d_->base.h() * d_->n, q};
    t->add.resize(std::size_t(q) * q);
    t->mul.resize(std::size_t(q) * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
        t->neg[a] = neg(a);
        if (a) t->inv[a] = inv(a);
        for (Elem b = 0; b < q; ++b) {
            t->add[a * q + b] = static_cast<std::uint16_t>(add(a, b));
            t->mul[a * q + b] = static_cast<std::uint16_t>(mul(a, b));
        }
    }
    if (d_->base.h() == 1) t->modulus = d_->modulus;
    Field f;
    f.t_ = t;
    return f;
}

} // namespace rankdens
