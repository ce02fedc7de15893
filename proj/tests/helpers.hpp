#pragma once

#include "funho/fincat/fincat.hpp"

#include <random>

namespace testing_helpers {

inline funho::SetMap random_map(std::mt19937_64& rng, funho::FinObj src, funho::FinObj tgt) {
    std::vector<int> im;
    std::uniform_int_distribution<int> v(0, tgt.size);
    for (int i = 0; i <= src.size; ++i) im.push_back(src.pointed && i == 0 ? 0 : v(rng));
    return funho::SetMap(src, tgt, im);
}

}  // namespace testing_helpers
