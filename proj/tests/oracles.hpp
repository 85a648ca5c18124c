#pragma once
// Independent enumerators shared by the unit tests and the acceptance run.
// They avoid the library's Grassmannian and closed forms on purpose.

#include "rankdens/gf.hpp"
#include "rankdens/matrix.hpp"
#include "rankdens/numeric.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using rankdens::Elem;
using rankdens::Field;

inline std::vector<Elem> digits(std::uint64_t t, unsigned len, unsigned q) {
    std::vector<Elem> v(len);
    for (auto& e : v) {
        e = static_cast<Elem>(t % q);
        t /= q;
    }
    return v;
}

/// Points of PG(N-1,q) as vectors with first nonzero entry 1, indexed 0..P-1.
struct Geometry {
    Field f;
    unsigned N;
    std::vector<std::vector<Elem>> pts;
    std::map<std::vector<Elem>, unsigned> index;

    Geometry(Field field, unsigned n) : f(std::move(field)), N(n) {
        std::uint64_t total = rankdens::ipow64(f.q(), N);
        for (std::uint64_t t = 1; t < total; ++t) {
            auto v = digits(t, N, f.q());
            unsigned i = 0;
            while (v[i] == 0) ++i;
            if (v[i] != 1) continue;
            index[v] = static_cast<unsigned>(pts.size());
            pts.push_back(v);
        }
    }

    unsigned point_of(std::vector<Elem> v) const {
        unsigned i = 0;
        while (v[i] == 0) ++i;
        Elem s = f.inv(v[i]);
        for (auto& e : v) e = f.mul(s, e);
        return index.at(v);
    }

    /// Every k-dimensional subspace as the bitmask of points it contains,
    /// found by spanning all k-tuples of points and deduplicating.
    std::set<std::vector<bool>> subspaces(unsigned k) const {
        std::set<std::vector<bool>> out;
        if (k == 0) {
            out.insert(std::vector<bool>(pts.size(), false));
            return out;
        }
        std::vector<unsigned> pick(k, 0);
        const unsigned P = static_cast<unsigned>(pts.size());
        std::function<void(unsigned, unsigned)> rec = [&](unsigned depth, unsigned start) {
            if (depth == k) {
                std::vector<bool> mask(P, false);
                std::uint64_t combos = rankdens::ipow64(f.q(), k);
                for (std::uint64_t t = 1; t < combos; ++t) {
                    auto c = digits(t, k, f.q());
                    std::vector<Elem> v(N, 0);
                    for (unsigned i = 0; i < k; ++i)
                        for (unsigned j = 0; j < N; ++j) v[j] = f.add(v[j], f.mul(c[i], pts[pick[i]][j]));
                    bool zero = true;
                    for (auto e : v) zero = zero && e == 0;
                    if (zero) return; // dependent tuple
                    unsigned id = point_of(v);
                    mask[id] = true;
                }
                out.insert(mask);
                return;
            }
            for (unsigned p = start; p < P; ++p) {
                pick[depth] = p;
                rec(depth + 1, p + 1);
            }
        };
        rec(0, 0);
        return out;
    }

    unsigned span_dim(const std::vector<unsigned>& ids) const {
        rankdens::Matrix M(static_cast<unsigned>(ids.size()), N);
        for (unsigned r = 0; r < ids.size(); ++r)
            for (unsigned c = 0; c < N; ++c) M(r, c) = pts[ids[r]][c];
        return rankdens::rank(f, M);
    }
};

/// Visit all l-subsets of {0..P-1} in lexicographic order.
inline void for_each_subset(unsigned P, unsigned l, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> s(l);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned depth, unsigned start) {
        if (depth == l) {
            fn(s);
            return;
        }
        for (unsigned p = start; p + (l - depth) <= P; ++p) {
            s[depth] = p;
            rec(depth + 1, p + 1);
        }
    };
    rec(0, 0);
}

/// Mean over all l-point sets of the fraction of k-subspaces avoiding them.
inline rankdens::Rational average_density(const Geometry& g, unsigned k, unsigned l) {
    auto subs = g.subspaces(k);
    rankdens::BigInt hits = 0, sets = 0;
    for_each_subset(static_cast<unsigned>(g.pts.size()), l, [&](const std::vector<unsigned>& s) {
        ++sets;
        for (const auto& V : subs) {
            bool ok = true;
            for (auto p : s) ok = ok && !V[p];
            if (ok) ++hits;
        }
    });
    return rankdens::Rational(hits, sets * subs.size());
}

/// Point sets of size l with span dimension rho avoiding V = <e_1..e_s>.
inline rankdens::BigInt count_avoiding(const Geometry& g, unsigned s, unsigned l, unsigned rho) {
    rankdens::BigInt n = 0;
    for_each_subset(static_cast<unsigned>(g.pts.size()), l, [&](const std::vector<unsigned>& S) {
        for (auto p : S) {
            bool inside = true;
            for (unsigned c = s; c < g.N; ++c) inside = inside && g.pts[p][c] == 0;
            if (inside) return;
        }
        if (g.span_dim(S) == rho) ++n;
    });
    return n;
}

} // namespace oracle
