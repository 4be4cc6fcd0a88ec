#pragma once

#include <cstddef>
#include <vector>

namespace fhtw::detail {

struct TupleHash {
    std::size_t operator()(const std::vector<int>& t) const {
        std::size_t h = t.size();
        for (int x : t)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace fhtw::detail
