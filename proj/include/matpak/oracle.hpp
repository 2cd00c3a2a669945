#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <matpak/matrix.hpp>
#include <matpak/rational.hpp>
#include <matpak/result.hpp>

namespace matpak::oracle {

/// Exact mirror of Matrix over Rational. Used to verify the floating-point
/// core; not part of the normal computation path.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    static RationalMatrix identity(std::size_t n) {
        std::vector<Rational> d(n * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Rational(1);
        return RationalMatrix(n, n, std::move(d));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Exact lift: each element becomes the dyadic rational equal to its stored
/// binary value.
inline RationalMatrix lift(const Matrix& m) {
    std::vector<Rational> d;
    d.reserve(m.rows() * m.cols());
    for (double v : m.data()) d.push_back(Rational::from_double(v));
    return RationalMatrix(m.rows(), m.cols(), std::move(d));
}

inline RationalMatrix transpose(const RationalMatrix& m) {
    std::vector<Rational> d(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            d[j * m.rows() + i] = m(i, j);
        }
    }
    return RationalMatrix(m.cols(), m.rows(), std::move(d));
}

inline Result<RationalMatrix, MatError> minor(const RationalMatrix& m, std::int64_t row,
                                              std::int64_t col) {
    if (row < 0 || col < 0 || row >= static_cast<std::int64_t>(m.rows()) ||
        col >= static_cast<std::int64_t>(m.cols())) {
        return MatError{MatErrorKind::IndexOutOfBounds, "oracle::minor",
                        "index (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside matrix"};
    }
    if (m.rows() < 2 || m.cols() < 2) {
        return MatError{MatErrorKind::InvalidSize, "oracle::minor",
                        "cannot take a minor of a 1-sized matrix"};
    }
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    std::vector<Rational> d;
    d.reserve((m.rows() - 1) * (m.cols() - 1));
    for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
        for (std::size_t j = 0; j + 1 < m.cols(); ++j) {
            d.push_back(m(i + (i >= r), j + (j >= c)));
        }
    }
    return RationalMatrix(m.rows() - 1, m.cols() - 1, std::move(d));
}

/// Determinant as the signed sum over all permutations of products of one
/// element per row and column. Exact; O(n!), capped at n = 8.
inline Result<Rational, MatError> det_leibniz(const RationalMatrix& m) {
    if (!m.is_square()) {
        return MatError{MatErrorKind::NonSquare, "det_leibniz", "matrix is not square"};
    }
    const std::size_t n = m.rows();
    if (n > 8) {
        return MatError{MatErrorKind::InvalidSize, "det_leibniz",
                        "permutation sum capped at 8x8, got " +
                            std::to_string(n) + "x" + std::to_string(n)};
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational det(0);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        Rational term(1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        det += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Determinant by fraction-free Gaussian elimination. Rows are first scaled
/// to integers (the scale divides out at the end), then every interior
/// division in the Bareiss schedule is exact over the integers. Row swaps
/// flip the sign; an all-zero pivot column means determinant 0. No size cap.
inline Result<Rational, MatError> det_bareiss(const RationalMatrix& m) {
    if (!m.is_square()) {
        return MatError{MatErrorKind::NonSquare, "det_bareiss", "matrix is not square"};
    }
    const std::size_t n = m.rows();

    std::vector<BigInt> a(n * n);
    BigInt scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            row_lcm = boost::multiprecision::lcm(row_lcm, m(i, j).den());
        }
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m(i, j).num() * (row_lcm / m(i, j).den());
        }
        scale *= row_lcm;
    }

    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i * n + k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == k) return Rational(0); // zero pivot column
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[k * n + j], a[swap_row * n + j]);
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    BigInt det = a[(n - 1) * n + (n - 1)];
    if (sign < 0) det = -det;
    return Rational(std::move(det), std::move(scale));
}

/// Cofactor matrix with exact minor determinants.
inline Result<RationalMatrix, MatError> cofactor(const RationalMatrix& m) {
    if (!m.is_square()) {
        return MatError{MatErrorKind::NonSquare, "oracle::cofactor", "matrix is not square"};
    }
    const std::size_t n = m.rows();
    std::vector<Rational> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto mm = minor(m, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
            if (!mm.ok()) {
                MatError e = mm.error();
                e.op = "oracle::cofactor";
                return e;
            }
            auto d = det_bareiss(mm.value());
            if (!d.ok()) return d.error();
            out.push_back(((i + j) % 2 == 0) ? d.value() : -d.value());
        }
    }
    return RationalMatrix(n, n, std::move(out));
}

/// Exact adjugate; satisfies m * exact_adjugate(m) = det(m) * I exactly.
inline Result<RationalMatrix, MatError> exact_adjugate(const RationalMatrix& m) {
    auto cof = cofactor(m);
    if (!cof.ok()) {
        MatError e = cof.error();
        e.op = "exact_adjugate";
        return e;
    }
    return transpose(cof.value());
}

/// Exact inverse as adjugate / determinant. Singular exactly when det = 0.
inline Result<RationalMatrix, MatError> exact_inverse(const RationalMatrix& m) {
    auto det = det_bareiss(m);
    if (!det.ok()) {
        MatError e = det.error();
        e.op = "exact_inverse";
        return e;
    }
    if (det.value().is_zero()) {
        return MatError{MatErrorKind::Singular, "exact_inverse", "determinant is zero"};
    }
    auto adj = exact_adjugate(m);
    if (!adj.ok()) {
        MatError e = adj.error();
        e.op = "exact_inverse";
        return e;
    }
    RationalMatrix out = adj.value();
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) /= det.value();
        }
    }
    return out;
}

inline Result<RationalMatrix, MatError> add(const RationalMatrix& p, const RationalMatrix& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        return MatError{MatErrorKind::DimensionMismatch, "oracle::add", "shape mismatch"};
    }
    RationalMatrix out = p;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) out(i, j) += q(i, j);
    }
    return out;
}

inline Result<RationalMatrix, MatError> sub(const RationalMatrix& p, const RationalMatrix& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        return MatError{MatErrorKind::DimensionMismatch, "oracle::sub", "shape mismatch"};
    }
    RationalMatrix out = p;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) out(i, j) -= q(i, j);
    }
    return out;
}

inline Result<RationalMatrix, MatError> mul(const RationalMatrix& p, const RationalMatrix& q) {
    if (p.cols() != q.rows()) {
        return MatError{MatErrorKind::DimensionMismatch, "oracle::mul", "inner dims differ"};
    }
    std::vector<Rational> out;
    out.reserve(p.rows() * q.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) {
            Rational sum(0);
            for (std::size_t k = 0; k < p.cols(); ++k) sum += p(i, k) * q(k, j);
            out.push_back(std::move(sum));
        }
    }
    return RationalMatrix(p.rows(), q.cols(), std::move(out));
}

inline Result<RationalMatrix, MatError> pow(const RationalMatrix& p, std::int64_t n) {
    if (!p.is_square()) {
        return MatError{MatErrorKind::NonSquare, "oracle::pow", "matrix is not square"};
    }
    if (n < 1) {
        return MatError{MatErrorKind::UnsupportedExponent, "oracle::pow",
                        "exponent must be a positive integer"};
    }
    RationalMatrix acc = p;
    for (std::int64_t k = 1; k < n; ++k) {
        auto next = mul(p, acc);
        if (!next.ok()) return next.error();
        acc = std::move(next).value();
    }
    return acc;
}

/// Scale by a rational factor, for building det * I reference values.
inline RationalMatrix scale(const RationalMatrix& m, const Rational& f) {
    RationalMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= f;
    }
    return out;
}

/// True iff shapes match and every |float(i,j) - exact(i,j)| <= tol, with the
/// exact value rounded to the nearest double for the comparison.
inline bool compare(const Matrix& float_result, const RationalMatrix& exact_result,
                    double tol) {
    if (float_result.rows() != exact_result.rows() ||
        float_result.cols() != exact_result.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < float_result.rows(); ++i) {
        for (std::size_t j = 0; j < float_result.cols(); ++j) {
            if (!(std::abs(float_result(i, j) - exact_result(i, j).to_double()) <= tol)) {
                return false;
            }
        }
    }
    return true;
}

inline bool compare_scalar(double float_result, const Rational& exact_result, double tol) {
    return std::abs(float_result - exact_result.to_double()) <= tol;
}

} // namespace matpak::oracle
