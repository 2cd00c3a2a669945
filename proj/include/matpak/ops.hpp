#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <matpak/matrix.hpp>

namespace matpak {

namespace detail {

inline std::optional<MatError> check_same_dims(const char* op, const Matrix& p,
                                               const Matrix& q) {
    if (p.rows() != q.rows()) {
        return MatError{MatErrorKind::DimensionMismatch, op,
                        std::string(op) + ": row size difference, " + dims(p) + " vs " +
                            dims(q)};
    }
    if (p.cols() != q.cols()) {
        return MatError{MatErrorKind::DimensionMismatch, op,
                        std::string(op) + ": column size difference, " + dims(p) + " vs " +
                            dims(q)};
    }
    return std::nullopt;
}

} // namespace detail

/// Elementwise sum. DimensionMismatch unless shapes agree on both axes.
inline Result<Matrix, MatError> add(const Matrix& p, const Matrix& q) {
    if (auto err = detail::check_same_dims("add", p, q)) return *err;
    std::vector<double> out;
    out.reserve(p.data().size());
    for (std::size_t k = 0; k < p.data().size(); ++k) out.push_back(p.data()[k] + q.data()[k]);
    return detail::ensure_finite("add", detail::make(p.rows(), p.cols(), std::move(out)));
}

/// Elementwise difference p - q.
inline Result<Matrix, MatError> sub(const Matrix& p, const Matrix& q) {
    if (auto err = detail::check_same_dims("sub", p, q)) return *err;
    std::vector<double> out;
    out.reserve(p.data().size());
    for (std::size_t k = 0; k < p.data().size(); ++k) out.push_back(p.data()[k] - q.data()[k]);
    return detail::ensure_finite("sub", detail::make(p.rows(), p.cols(), std::move(out)));
}

/// Product p*q via transposition of p: element (i,j) is column i of p^T
/// dotted with column j of q. Same summation order as the usual row-by-column
/// loop, so the results agree bit for bit.
inline Result<Matrix, MatError> mul(const Matrix& p, const Matrix& q) {
    if (p.cols() != q.rows()) {
        return MatError{MatErrorKind::DimensionMismatch, "mul",
                        "column size of P is different from the row size of Q: " +
                            detail::dims(p) + " vs " + detail::dims(q)};
    }
    const Matrix pt = transpose(p);
    const std::size_t inner = pt.rows(); // == p.cols() == q.rows()
    std::vector<double> out;
    out.reserve(p.rows() * q.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) {
            double sum = 0.0;
            for (std::size_t x = 0; x < inner; ++x) {
                sum += pt(x, i) * q(x, j);
            }
            out.push_back(sum);
        }
    }
    return detail::ensure_finite("mul", detail::make(p.rows(), q.cols(), std::move(out)));
}

/// p^n for n >= 1 on square matrices, evaluated as the linear chain
/// p * (p * (... * p)): one multiplication per exponent step, no
/// square-and-multiply shortcuts.
inline Result<Matrix, MatError> pow(const Matrix& p, std::int64_t n) {
    if (!p.is_square()) {
        return MatError{MatErrorKind::NonSquare, "pow",
                        "repeated multiplication requires a square matrix, got " +
                            detail::dims(p)};
    }
    if (n < 1) {
        return MatError{MatErrorKind::UnsupportedExponent, "pow",
                        "exponent must be a positive integer, got " + std::to_string(n)};
    }
    Matrix acc = p;
    for (std::int64_t k = 1; k < n; ++k) {
        auto next = mul(p, acc);
        if (!next.ok()) {
            MatError e = next.error();
            e.op = "pow";
            return e;
        }
        acc = std::move(next).value();
    }
    return acc;
}

} // namespace matpak
