#include "rankdens/grassmannian.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rankdens {

Grassmannian::Grassmannian(Field f, unsigned N, unsigned k) : f_(std::move(f)), N_(N), k_(k) {
    if (k > N) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    const unsigned q = f_.q();
    std::vector<unsigned> piv(k);
    for (unsigned i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
        Pattern p;
        p.pivots = piv;
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = piv[r] + 1; c < N; ++c)
                if (!std::binary_search(piv.begin(), piv.end(), c)) p.free_pos.push_back(r * N + c);
        p.offset = total_;
        p.count = 1;
        for (std::size_t i = 0; i < p.free_pos.size(); ++i) {
            if (p.count > std::numeric_limits<std::uint64_t>::max() / q / 2)
                throw std::invalid_argument("Grassmannian too large to index");
            p.count *= q;
        }
        total_ += p.count;
        patterns_.push_back(std::move(p));
        // next combination
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && piv[i] == N - k + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++piv[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

void Grassmannian::for_each(std::uint64_t begin, std::uint64_t end,
                            const std::function<void(const Matrix&)>& fn) const {
    if (end > total_) end = total_;
    if (begin >= end) return;
    const unsigned q = f_.q();
    Matrix M(k_, N_);
    auto it = std::upper_bound(patterns_.begin(), patterns_.end(), begin,
                               [](std::uint64_t v, const Pattern& p) { return v < p.offset; });
    --it;
    std::uint64_t idx = begin;
    for (; it != patterns_.end() && idx < end; ++it) {
        const Pattern& p = *it;
        std::fill(M.a.begin(), M.a.end(), 0);
        for (unsigned r = 0; r < k_; ++r) M.a[r * N_ + p.pivots[r]] = 1;
        const std::size_t nf = p.free_pos.size();
        // decode the local index into digits, most significant first
        std::vector<Elem> digit(nf, 0);
        std::uint64_t local = idx - p.offset;
        for (std::size_t j = nf; j-- > 0;) {
            digit[j] = static_cast<Elem>(local % q);
            local /= q;
        }
        for (std::size_t j = 0; j < nf; ++j) M.a[p.free_pos[j]] = digit[j];
        std::uint64_t stop = std::min(end, p.offset + p.count);
        for (;;) {
            fn(M);
            if (++idx >= stop) break;
            std::size_t j = nf;
            while (j-- > 0) {
                if (++digit[j] < q) {
                    M.a[p.free_pos[j]] = digit[j];
                    break;
                }
                digit[j] = 0;
                M.a[p.free_pos[j]] = 0;
            }
        }
    }
}

Matrix Grassmannian::at(std::uint64_t index) const {
    if (index >= total_) throw std::out_of_range("subspace index out of range");
    Matrix out;
    for_each(index, index + 1, [&](const Matrix& m) { out = m; });
    return out;
}

} // namespace rankdens
