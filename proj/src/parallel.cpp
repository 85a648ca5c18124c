#include "rankdens/parallel.hpp"

namespace rankdens {

std::vector<Range> split_range(std::uint64_t total, unsigned chunks) {
    if (chunks == 0) chunks = 1;
    std::vector<Range> r;
    r.reserve(chunks);
    for (unsigned i = 0; i < chunks; ++i) {
        std::uint64_t b = total * i / chunks;
        std::uint64_t e = total * (i + 1) / chunks;
        r.push_back({b, e});
    }
    return r;
}

} // namespace rankdens
