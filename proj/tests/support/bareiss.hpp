#pragma once

// Independent rank oracle: fraction-free Bareiss elimination on the
// integer matrix obtained by clearing denominators row by row. Shares no
// code path with rbsys::linear_solve_suite.

#include <gmpxx.h>

#include <vector>

#include "rbsys/linalg.hpp"

namespace testsupport {

inline size_t bareiss_rank(const rbsys::Matrix& a) {
    size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (size_t j = 0; j < cols; ++j) {
            mpz_class den = a.at(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (size_t j = 0; j < cols; ++j)
            m[i][j] = a.at(i, j).numerator() * (lcm / a.at(i, j).denominator());
    }

    size_t rank = 0;
    mpz_class prev = 1;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace testsupport
