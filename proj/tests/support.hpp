#pragma once

#include <random>

#include "ntext/corpus.hpp"
#include "ntext/linalg.hpp"

namespace ntx::testing {

inline Mat rows(Residue p, std::vector<std::vector<long long>> r, std::size_t cols_if_empty = 0) {
    return Mat::from_rows(PrimeField(p), r, cols_if_empty);
}

inline Mat random_mat(Residue p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    return random_matrix(PrimeField(p), r, c, rng);
}

}  // namespace ntx::testing
