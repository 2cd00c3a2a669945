#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include <matpak/matpak.hpp>

namespace matpak::test {

/// Builds a Matrix from literal rows, aborting on invalid input. Test data is
/// always well-formed, so the error path is a bug in the test itself.
inline Matrix mat(const std::vector<std::vector<double>>& rows) {
    auto r = Matrix::from_rows(rows);
    if (!r.ok()) std::abort();
    return std::move(r).value();
}

inline Matrix identity(std::size_t n) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1.0;
    return mat(rows);
}

inline Matrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo,
                                int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<std::vector<double>> rows(r, std::vector<double>(c));
    for (auto& row : rows) {
        for (auto& v : row) v = static_cast<double>(dist(rng));
    }
    return mat(rows);
}

inline Matrix random_real_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                                 double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<std::vector<double>> rows(r, std::vector<double>(c));
    for (auto& row : rows) {
        for (auto& v : row) v = dist(rng);
    }
    return mat(rows);
}

/// Finite double drawn from a mixture that covers moderate values, integers,
/// extreme exponents, subnormals and signed zero.
inline double random_finite_double(std::mt19937_64& rng) {
    switch (rng() % 8) {
        case 0:
        case 1:
        case 2: {
            std::uniform_real_distribution<double> d(-1e3, 1e3);
            return d(rng);
        }
        case 3: {
            std::uniform_int_distribution<int> d(-1000, 1000);
            return static_cast<double>(d(rng));
        }
        case 4: {
            std::uniform_real_distribution<double> d(-1.0, 1.0);
            std::uniform_int_distribution<int> e(-300, 300);
            return std::ldexp(d(rng), e(rng));
        }
        case 5: {
            // raw bit patterns, rejecting non-finite
            for (;;) {
                const double v = std::bit_cast<double>(rng());
                if (std::isfinite(v)) return v;
            }
        }
        case 6: {
            std::uniform_real_distribution<double> d(-1e10, 1e10);
            return std::rint(d(rng)); // large integral values
        }
        default: {
            static const double specials[] = {0.0,    -0.0,   1e10,  5e-324,
                                              -5e-324, 1.7976931348623157e308,
                                              -0.5,    0.1,   1e308, -1e-308};
            return specials[rng() % (sizeof(specials) / sizeof(specials[0]))];
        }
    }
}

inline Matrix random_finite_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::vector<std::vector<double>> rows(r, std::vector<double>(c));
    for (auto& row : rows) {
        for (auto& v : row) v = random_finite_double(rng);
    }
    return mat(rows);
}

/// max |a(i,j) - b(i,j)|; requires equal shapes.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

inline oracle::RationalMatrix rational_identity(std::size_t n) {
    return oracle::RationalMatrix::identity(n);
}

} // namespace matpak::test
