#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include <matpak/result.hpp>

namespace matpak {

enum class MatErrorKind {
    InvalidSize,
    SizeMismatch,
    DimensionMismatch,
    NonSquare,
    IndexOutOfBounds,
    Singular,
    UnsupportedExponent,
    NonFinite,
};

constexpr const char* to_string(MatErrorKind k) noexcept {
    switch (k) {
        case MatErrorKind::InvalidSize: return "InvalidSize";
        case MatErrorKind::SizeMismatch: return "SizeMismatch";
        case MatErrorKind::DimensionMismatch: return "DimensionMismatch";
        case MatErrorKind::NonSquare: return "NonSquare";
        case MatErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
        case MatErrorKind::Singular: return "Singular";
        case MatErrorKind::UnsupportedExponent: return "UnsupportedExponent";
        case MatErrorKind::NonFinite: return "NonFinite";
    }
    return "MatError";
}

/// Algebraic or structural failure. `op` names the operation that failed and
/// `detail` carries the offending dimensions, indices or values.
struct MatError {
    MatErrorKind kind;
    std::string op;
    std::string detail;

    /// One-line diagnostic, "<Kind>: <detail>".
    std::string message() const { return std::string(to_string(kind)) + ": " + detail; }
};

enum class IdentityVerdict { Identity, NotIdentity, NotSquare };

class Matrix;

namespace detail {
Matrix make(std::size_t rows, std::size_t cols, std::vector<double> data);
}

/// Dense row-major matrix of doubles. Values are immutable once constructed;
/// every operation returns a new Matrix. All elements are finite.
class Matrix {
public:
    using Grid = std::vector<std::vector<double>>;

    /// rows x cols matrix of zeros. InvalidSize when either count is < 1.
    static Result<Matrix, MatError> zero(std::int64_t rows, std::int64_t cols);

    /// Matrix holding a copy of `data`. SizeMismatch when the grid shape is
    /// not exactly rows x cols (including ragged rows).
    static Result<Matrix, MatError> from_rows(const Grid& data, std::int64_t rows,
                                              std::int64_t cols);

    /// Shape inferred from the grid itself.
    static Result<Matrix, MatError> from_rows(const Grid& data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * cols_ + j];
    }

    std::span<const double> data() const noexcept { return data_; }

    /// Numeric equality (same shape, elementwise ==).
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    friend Matrix detail::make(std::size_t, std::size_t, std::vector<double>);

    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

namespace detail {

/// Internal constructor for pre-validated data.
inline Matrix make(std::size_t rows, std::size_t cols, std::vector<double> data) {
    return Matrix(rows, cols, std::move(data));
}

inline std::string dims(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

inline std::string dims(std::int64_t r, std::int64_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

// Upper bound on total elements accepted by the factories.
inline constexpr std::int64_t kMaxElements = 16'000'000;

inline bool bad_dims(std::int64_t rows, std::int64_t cols) {
    return rows < 1 || cols < 1 || rows > kMaxElements || cols > kMaxElements ||
           rows * cols > kMaxElements;
}

/// NonFinite check applied after arithmetic that can overflow.
inline Result<Matrix, MatError> ensure_finite(const char* op, Matrix m) {
    for (double v : m.data()) {
        if (!std::isfinite(v)) {
            return MatError{MatErrorKind::NonFinite, op,
                            std::string(op) + " produced a non-finite element in a " +
                                dims(m) + " result"};
        }
    }
    return m;
}

} // namespace detail

inline Result<Matrix, MatError> Matrix::zero(std::int64_t rows, std::int64_t cols) {
    if (detail::bad_dims(rows, cols)) {
        return MatError{MatErrorKind::InvalidSize, "zero",
                        "dimensions must be at least 1x1, got " + detail::dims(rows, cols)};
    }
    return detail::make(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                        std::vector<double>(static_cast<std::size_t>(rows * cols), 0.0));
}

inline Result<Matrix, MatError> Matrix::from_rows(const Grid& data, std::int64_t rows,
                                                  std::int64_t cols) {
    if (detail::bad_dims(rows, cols)) {
        return MatError{MatErrorKind::InvalidSize, "from_rows",
                        "dimensions must be at least 1x1, got " + detail::dims(rows, cols)};
    }
    const auto r = static_cast<std::size_t>(rows);
    const auto c = static_cast<std::size_t>(cols);
    if (data.size() != r) {
        return MatError{MatErrorKind::SizeMismatch, "from_rows",
                        "allocation size different: grid has " + std::to_string(data.size()) +
                            " rows, expected " + std::to_string(r)};
    }
    std::vector<double> flat;
    flat.reserve(r * c);
    for (std::size_t i = 0; i < r; ++i) {
        if (data[i].size() != c) {
            return MatError{MatErrorKind::SizeMismatch, "from_rows",
                            "allocation size different: row " + std::to_string(i) + " has " +
                                std::to_string(data[i].size()) + " elements, expected " +
                                std::to_string(c)};
        }
        for (std::size_t j = 0; j < c; ++j) {
            const double v = data[i][j];
            if (!std::isfinite(v)) {
                return MatError{MatErrorKind::NonFinite, "from_rows",
                                "element (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not finite"};
            }
            flat.push_back(v);
        }
    }
    return detail::make(r, c, std::move(flat));
}

inline Result<Matrix, MatError> Matrix::from_rows(const Grid& data) {
    if (data.empty() || data[0].empty()) {
        return MatError{MatErrorKind::InvalidSize, "from_rows",
                        "dimensions must be at least 1x1"};
    }
    return from_rows(data, static_cast<std::int64_t>(data.size()),
                     static_cast<std::int64_t>(data[0].size()));
}

/// New matrix of m's dimensions holding `data`. SizeMismatch when the grid
/// shape differs from m's.
inline Result<Matrix, MatError> fill(const Matrix& m, const Matrix::Grid& data) {
    if (data.size() != m.rows()) {
        return MatError{MatErrorKind::SizeMismatch, "fill",
                        "assign error: grid has " + std::to_string(data.size()) +
                            " rows, matrix is " + detail::dims(m)};
    }
    for (const auto& row : data) {
        if (row.size() != m.cols()) {
            return MatError{MatErrorKind::SizeMismatch, "fill",
                            "assign error: grid row has " + std::to_string(row.size()) +
                                " elements, matrix is " + detail::dims(m)};
        }
    }
    auto r = Matrix::from_rows(data, static_cast<std::int64_t>(m.rows()),
                               static_cast<std::int64_t>(m.cols()));
    if (!r.ok()) {
        MatError e = r.error();
        e.op = "fill";
        return e;
    }
    return r;
}

inline bool is_square(const Matrix& m) noexcept { return m.is_square(); }

/// Identity iff every diagonal element is exactly 1 and every off-diagonal
/// element is exactly 0. Checks the actual entries, not per-row nonzero
/// counts, so permutation matrices classify as NotIdentity.
inline IdentityVerdict is_identity(const Matrix& m) noexcept {
    if (!m.is_square()) return IdentityVerdict::NotSquare;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != (i == j ? 1.0 : 0.0)) return IdentityVerdict::NotIdentity;
        }
    }
    return IdentityVerdict::Identity;
}

inline Matrix transpose(const Matrix& m) {
    std::vector<double> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[j * m.rows() + i] = m(i, j);
        }
    }
    return detail::make(m.cols(), m.rows(), std::move(out));
}

/// Submatrix with row `row` and column `col` deleted: result(i,j) =
/// m(i + (i >= row), j + (j >= col)). One index-shift rule covers corner,
/// edge and interior positions alike.
inline Result<Matrix, MatError> minor(const Matrix& m, std::int64_t row, std::int64_t col) {
    if (row < 0 || col < 0 || row >= static_cast<std::int64_t>(m.rows()) ||
        col >= static_cast<std::int64_t>(m.cols())) {
        return MatError{MatErrorKind::IndexOutOfBounds, "minor",
                        "index (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside " + detail::dims(m) + " matrix"};
    }
    if (m.rows() < 2 || m.cols() < 2) {
        return MatError{MatErrorKind::InvalidSize, "minor",
                        "cannot take a minor of a " + detail::dims(m) + " matrix"};
    }
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    std::vector<double> out;
    out.reserve((m.rows() - 1) * (m.cols() - 1));
    for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
        for (std::size_t j = 0; j + 1 < m.cols(); ++j) {
            out.push_back(m(i + (i >= r), j + (j >= c)));
        }
    }
    return detail::make(m.rows() - 1, m.cols() - 1, std::move(out));
}

/// Grid G with G(i,j) = minor(m, i, j) for every position.
inline Result<std::vector<std::vector<Matrix>>, MatError> all_minors(const Matrix& m) {
    if (m.rows() < 2 || m.cols() < 2) {
        return MatError{MatErrorKind::InvalidSize, "all_minors",
                        "cannot take minors of a " + detail::dims(m) + " matrix"};
    }
    std::vector<std::vector<Matrix>> grid;
    grid.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Matrix> row;
        row.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            auto mm = minor(m, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
            if (!mm.ok()) return mm.error();
            row.push_back(std::move(mm).value());
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

namespace detail {

// Laplace expansion along row 0. Exponential; callers gate the size.
inline double det_laplace(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double det = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const auto sub = minor(m, 0, static_cast<std::int64_t>(j));
        const double term = m(0, j) * det_laplace(sub.value());
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline constexpr std::size_t kLaplaceCap = 10;

} // namespace detail

/// Determinant by cofactor expansion along row 0. O(n!), capped at n = 10;
/// the exact oracle's elimination path has no such cap.
inline Result<double, MatError> determinant(const Matrix& m) {
    if (!m.is_square()) {
        return MatError{MatErrorKind::NonSquare, "determinant",
                        "matrix is " + detail::dims(m) + ", not square"};
    }
    if (m.rows() > detail::kLaplaceCap) {
        return MatError{MatErrorKind::InvalidSize, "determinant",
                        "cofactor expansion capped at 10x10, got " + detail::dims(m)};
    }
    const double det = detail::det_laplace(m);
    if (!std::isfinite(det)) {
        return MatError{MatErrorKind::NonFinite, "determinant",
                        "determinant of " + detail::dims(m) + " matrix overflowed"};
    }
    return det;
}

/// Cofactor matrix: result(i,j) = (-1)^(i+j) * det(minor(m,i,j)). The element
/// m(i,j) itself is not a factor.
inline Result<Matrix, MatError> cofactor(const Matrix& m) {
    if (!m.is_square()) {
        return MatError{MatErrorKind::NonSquare, "cofactor",
                        "numofrows not equal numofcols: " + detail::dims(m)};
    }
    if (m.rows() > detail::kLaplaceCap) {
        return MatError{MatErrorKind::InvalidSize, "cofactor",
                        "cofactor expansion capped at 10x10, got " + detail::dims(m)};
    }
    const std::size_t n = m.rows();
    std::vector<double> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto mm = minor(m, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
            if (!mm.ok()) {
                MatError e = mm.error();
                e.op = "cofactor";
                return e;
            }
            const double d = detail::det_laplace(mm.value());
            out.push_back(((i + j) % 2 == 0) ? d : -d);
        }
    }
    return detail::ensure_finite("cofactor", detail::make(n, n, std::move(out)));
}

/// Adjugate: transpose of the cofactor matrix.
inline Result<Matrix, MatError> adjoint(const Matrix& m) {
    auto cof = cofactor(m);
    if (!cof.ok()) {
        MatError e = cof.error();
        e.op = "adjoint";
        return e;
    }
    return transpose(cof.value());
}

inline constexpr double kSingularThreshold = 1e-12;

/// Inverse as adjoint / determinant. |det| < 1e-12 reports Singular instead
/// of dividing; the threshold is absolute, sized for matrices with O(1)
/// entries.
inline Result<Matrix, MatError> inverse(const Matrix& m) {
    auto det = determinant(m);
    if (!det.ok()) {
        MatError e = det.error();
        e.op = "inverse";
        return e;
    }
    if (std::abs(det.value()) < kSingularThreshold) {
        return MatError{MatErrorKind::Singular, "inverse", "determinant below threshold"};
    }
    auto adj = adjoint(m);
    if (!adj.ok()) {
        MatError e = adj.error();
        e.op = "inverse";
        return e;
    }
    const Matrix& a = adj.value();
    std::vector<double> out;
    out.reserve(a.rows() * a.cols());
    for (double v : a.data()) out.push_back(v / det.value());
    return detail::ensure_finite("inverse", detail::make(a.rows(), a.cols(), std::move(out)));
}

/// Bitwise equality; distinguishes -0.0 from 0.0 where operator== does not.
inline bool identical(const Matrix& a, const Matrix& b) noexcept {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return std::memcmp(a.data().data(), b.data().data(),
                       a.data().size() * sizeof(double)) == 0;
}

} // namespace matpak
