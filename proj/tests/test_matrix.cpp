#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "support/helpers.hpp"

using namespace matpak;
using test::identity;
using test::mat;

TEST_CASE("zero builds an all-zero matrix") {
    auto m = Matrix::zero(2, 3);
    REQUIRE(m.ok());
    CHECK(m.value().rows() == 2);
    CHECK(m.value().cols() == 3);
    for (double v : m.value().data()) CHECK(v == 0.0);

    auto one = Matrix::zero(1, 1);
    REQUIRE(one.ok());
    CHECK(one.value() == mat({{0}}));
}

TEST_CASE("zero rejects non-positive dimensions") {
    auto neg = Matrix::zero(-1, 2);
    REQUIRE_FALSE(neg.ok());
    CHECK(neg.error().kind == MatErrorKind::InvalidSize);

    auto nil = Matrix::zero(0, 5);
    REQUIRE_FALSE(nil.ok());
    CHECK(nil.error().kind == MatErrorKind::InvalidSize);

    auto huge = Matrix::zero(1'000'000'000, 1'000'000'000);
    REQUIRE_FALSE(huge.ok());
    CHECK(huge.error().kind == MatErrorKind::InvalidSize);
}

TEST_CASE("from_rows copies the given grid") {
    auto m = Matrix::from_rows({{3, 4, 5}, {6, 7, 8}}, 2, 3);
    REQUIRE(m.ok());
    CHECK(m.value()(0, 0) == 3);
    CHECK(m.value()(1, 2) == 8);

    auto one = Matrix::from_rows({{1}}, 1, 1);
    REQUIRE(one.ok());
    CHECK(one.value() == mat({{1}}));
}

TEST_CASE("from_rows rejects shape mismatches") {
    auto wrong = Matrix::from_rows({{1, 2}, {3, 4}}, 3, 2);
    REQUIRE_FALSE(wrong.ok());
    CHECK(wrong.error().kind == MatErrorKind::SizeMismatch);

    auto ragged = Matrix::from_rows({{1, 2}, {3}}, 2, 2);
    REQUIRE_FALSE(ragged.ok());
    CHECK(ragged.error().kind == MatErrorKind::SizeMismatch);

    auto empty = Matrix::from_rows({});
    REQUIRE_FALSE(empty.ok());
    CHECK(empty.error().kind == MatErrorKind::InvalidSize);
}

TEST_CASE("from_rows rejects non-finite elements") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double bad : {inf, -inf, nan}) {
        auto m = Matrix::from_rows({{1, bad}});
        REQUIRE_FALSE(m.ok());
        CHECK(m.error().kind == MatErrorKind::NonFinite);
    }
}

TEST_CASE("fill returns a new matrix of the same dimensions") {
    const auto zeros = Matrix::zero(2, 2).value();
    auto filled = fill(zeros, {{1, 2}, {3, 4}});
    REQUIRE(filled.ok());
    CHECK(filled.value() == mat({{1, 2}, {3, 4}}));
    CHECK(zeros == mat({{0, 0}, {0, 0}})); // source untouched

    const auto m = mat({{5, 6}, {7, 8}});
    auto same = fill(m, {{5, 6}, {7, 8}});
    REQUIRE(same.ok());
    CHECK(same.value() == m);

    auto wrong = fill(zeros, {{1, 2, 3}});
    REQUIRE_FALSE(wrong.ok());
    CHECK(wrong.error().kind == MatErrorKind::SizeMismatch);
}

TEST_CASE("is_square") {
    CHECK(mat({{1, 2}, {3, 4}}).is_square());
    CHECK_FALSE(mat({{1, 2, 3}, {4, 5, 6}}).is_square());
    CHECK(mat({{1}}).is_square());
}

TEST_CASE("is_identity checks actual entries") {
    CHECK(is_identity(identity(3)) == IdentityVerdict::Identity);
    CHECK(is_identity(mat({{1, 2, 3}, {4, 5, 6}})) == IdentityVerdict::NotSquare);
    // permutation matrix: one 1 per row, still not the identity
    CHECK(is_identity(mat({{0, 1}, {1, 0}})) == IdentityVerdict::NotIdentity);
    CHECK(is_identity(mat({{1, 0}, {0, 2}})) == IdentityVerdict::NotIdentity);
    CHECK(is_identity(mat({{0, 0}, {0, 0}})) == IdentityVerdict::NotIdentity);
}

TEST_CASE("is_identity accepts every identity up to 8x8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(is_identity(identity(n)) == IdentityVerdict::Identity);
    }
}

TEST_CASE("every non-identity permutation matrix is NotIdentity") {
    std::mt19937_64 rng(0x5eed0001);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            bool is_id = true;
            std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
            for (std::size_t i = 0; i < n; ++i) {
                rows[i][perm[i]] = 1.0;
                if (perm[i] != i) is_id = false;
            }
            const auto verdict = is_identity(mat(rows));
            if (is_id) {
                CHECK(verdict == IdentityVerdict::Identity);
            } else {
                CHECK(verdict == IdentityVerdict::NotIdentity);
            }
        }
    }
}

TEST_CASE("transpose reproduces the worked examples") {
    CHECK(transpose(mat({{2, 5}, {3, 4}, {4, 3}, {5, 2}})) ==
          mat({{2, 3, 4, 5}, {5, 4, 3, 2}}));
    CHECK(transpose(mat({{2, 7, 5, 1, 5}, {2, 8, 4, 1, 2}, {4, 9, 3, 4, 6}, {6, 5, 2, 4, 4}})) ==
          mat({{2, 2, 4, 6}, {7, 8, 9, 5}, {5, 4, 3, 2}, {1, 1, 4, 4}, {5, 2, 6, 4}}));
    CHECK(transpose(mat({{7}})) == mat({{7}}));
}

TEST_CASE("transpose is an involution, bit for bit") {
    std::mt19937_64 rng(0x5eed0002);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t r = 1 + rng() % 6;
        const std::size_t c = 1 + rng() % 6;
        const auto a = test::random_finite_matrix(rng, r, c);
        CHECK(identical(transpose(transpose(a)), a));
    }
}

TEST_CASE("minor reproduces the 5x6 worked examples") {
    const auto m = mat({{2, 7, 3, 2, 3, 8},
                        {4, 9, 3, 4, 9, 4},
                        {5, 1, 1, 8, 1, 1},
                        {6, 5, 6, 5, 2, 7},
                        {8, 5, 1, 3, 8, 7}});
    auto m00 = minor(m, 0, 0);
    REQUIRE(m00.ok());
    CHECK(m00.value() ==
          mat({{9, 3, 4, 9, 4}, {1, 1, 8, 1, 1}, {5, 6, 5, 2, 7}, {5, 1, 3, 8, 7}}));

    auto m40 = minor(m, 4, 0);
    REQUIRE(m40.ok());
    CHECK(m40.value() ==
          mat({{7, 3, 2, 3, 8}, {9, 3, 4, 9, 4}, {1, 1, 8, 1, 1}, {5, 6, 5, 2, 7}}));

    auto m22 = minor(m, 2, 2);
    REQUIRE(m22.ok());
    CHECK(m22.value() ==
          mat({{2, 7, 2, 3, 8}, {4, 9, 4, 9, 4}, {6, 5, 5, 2, 7}, {8, 5, 3, 8, 7}}));
}

TEST_CASE("minor of a 2x2 keeps the opposite corner") {
    auto m = minor(mat({{1, 2}, {3, 4}}), 0, 0);
    REQUIRE(m.ok());
    CHECK(m.value() == mat({{4}}));
}

TEST_CASE("minor rejects bad indices and degenerate sizes") {
    const auto m3 = mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    for (auto [r, c] : {std::pair<std::int64_t, std::int64_t>{5, 0},
                        {0, 3},
                        {-1, 0},
                        {0, -2}}) {
        auto bad = minor(m3, r, c);
        REQUIRE_FALSE(bad.ok());
        CHECK(bad.error().kind == MatErrorKind::IndexOutOfBounds);
    }
    auto tiny = minor(mat({{1, 2, 3}}), 0, 1);
    REQUIRE_FALSE(tiny.ok());
    CHECK(tiny.error().kind == MatErrorKind::InvalidSize);
}

TEST_CASE("minor equals the delete-row-and-column definition, exhaustively") {
    std::mt19937_64 rng(0x5eed0003);
    for (std::size_t r = 2; r <= 5; ++r) {
        for (std::size_t c = 2; c <= 5; ++c) {
            const auto m = test::random_int_matrix(rng, r, c, -99, 99);
            for (std::size_t di = 0; di < r; ++di) {
                for (std::size_t dj = 0; dj < c; ++dj) {
                    // reference: copy every row != di and column != dj
                    std::vector<std::vector<double>> kept;
                    for (std::size_t i = 0; i < r; ++i) {
                        if (i == di) continue;
                        std::vector<double> row;
                        for (std::size_t j = 0; j < c; ++j) {
                            if (j == dj) continue;
                            row.push_back(m(i, j));
                        }
                        kept.push_back(std::move(row));
                    }
                    auto got = minor(m, static_cast<std::int64_t>(di),
                                     static_cast<std::int64_t>(dj));
                    REQUIRE(got.ok());
                    CHECK(got.value() == mat(kept));
                }
            }
        }
    }
}

TEST_CASE("all_minors matches minor at every position") {
    const auto forced = all_minors(mat({{1, 2}, {3, 4}}));
    REQUIRE(forced.ok());
    CHECK(forced.value()[0][0] == mat({{4}}));
    CHECK(forced.value()[0][1] == mat({{3}}));
    CHECK(forced.value()[1][0] == mat({{2}}));
    CHECK(forced.value()[1][1] == mat({{1}}));

    std::mt19937_64 rng(0x5eed0004);
    const auto m = test::random_int_matrix(rng, 4, 4, -9, 9);
    auto grid = all_minors(m);
    REQUIRE(grid.ok());
    REQUIRE(grid.value().size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(grid.value()[i].size() == 4);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(grid.value()[i][j].rows() == 3);
            CHECK(grid.value()[i][j].cols() == 3);
            CHECK(grid.value()[i][j] ==
                  minor(m, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)).value());
        }
    }

    auto degenerate = all_minors(mat({{1}}));
    REQUIRE_FALSE(degenerate.ok());
    CHECK(degenerate.error().kind == MatErrorKind::InvalidSize);
}

TEST_CASE("errors carry operation and context") {
    auto bad = minor(mat({{1, 2}, {3, 4}}), 7, 0);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.error().op == "minor");
    CHECK(bad.error().detail.find("7") != std::string::npos);
    CHECK(bad.error().detail.find("2x2") != std::string::npos);
    CHECK(bad.error().message().rfind("IndexOutOfBounds:", 0) == 0);
}
