#pragma once

#include "rankdens/gf.hpp"
#include "rankdens/matrix.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rankdens {

/// All k-dimensional subspaces of F_q^N, each visited once as its RREF basis.
///
/// Order: pivot patterns in lexicographic order; within a pattern the free
/// entries (row-major) run as a base-q counter, the first free entry being the
/// most significant digit. Every subspace has a stable index in [0, size()),
/// which is what makes chunked traversal deterministic.
class Grassmannian {
public:
    Grassmannian(Field f, unsigned N, unsigned k);

    const Field& field() const { return f_; }
    unsigned N() const { return N_; }
    unsigned k() const { return k_; }
    std::uint64_t size() const { return total_; }

    /// Calls fn(basis) for subspace indices in [begin, end). `basis` is a
    /// k x N RREF matrix reused between calls.
    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(const Matrix&)>& fn) const;
    void for_each(const std::function<void(const Matrix&)>& fn) const { for_each(0, total_, fn); }

    /// Subspace at a given index.
    Matrix at(std::uint64_t index) const;

private:
    struct Pattern {
        std::vector<unsigned> pivots;
        std::vector<std::uint32_t> free_pos; // flat positions r*N + c
        std::uint64_t offset = 0;
        std::uint64_t count = 0;
    };

    Field f_;
    unsigned N_, k_;
    std::vector<Pattern> patterns_;
    std::uint64_t total_ = 0;
};

} // namespace rankdens
