#include <doctest.h>

#include "gfo/matrix.hpp"
#include "support.hpp"

using gfo::Field;
using gfo::Matrix;
using namespace testsupport;

TEST_CASE("multiplication basics") {
    const Field z5(5);
    std::mt19937_64 rng(1);
    const Matrix m = random_matrix(z5, 3, 3, rng);
    CHECK(gfo::identity(z5, 3) * m == m);
    CHECK(m * gfo::identity(z5, 3) == m);

    Matrix a(z5, 1, 1), b(z5, 1, 1);
    a.set_index(0, 0, 2);
    b.set_index(0, 0, 3);
    CHECK((a * b).index_at(0, 0) == 1);

    CHECK_THROWS_AS((void)(m * Matrix(z5, 2, 2)), gfo::DimMismatch);
    const Field z7(7);
    CHECK_THROWS_AS((void)(m * gfo::identity(z7, 3)), gfo::FieldMismatch);
}

TEST_CASE("multiplication matches the naive oracle") {
    std::mt19937_64 rng(2);
    for (const auto& fx : lemma_fields()) {
        const Field f = make_field(fx);
        const Matrix a = random_matrix(f, 4, 3, rng);
        const Matrix b = random_matrix(f, 3, 5, rng);
        CHECK(a * b == naive_matmul(a, b));
    }
}

TEST_CASE("transpose, add, scalar ops") {
    const Field z5(5);
    std::mt19937_64 rng(3);
    const Matrix a = random_matrix(z5, 3, 4, rng);
    CHECK(gfo::transpose(gfo::transpose(a)) == a);
    CHECK(a + gfo::scalar_mul(z5.from_int(-1), a) == gfo::zero_matrix(z5, 3, 4));
    CHECK(a - a == gfo::zero_matrix(z5, 3, 4));

    const Matrix i2 = gfo::identity(z5, 2);
    CHECK(i2.index_at(0, 0) == 1);
    CHECK(i2.index_at(0, 1) == 0);
    CHECK(i2.index_at(1, 0) == 0);
    CHECK(i2.index_at(1, 1) == 1);

    CHECK_THROWS_AS((void)(a + gfo::identity(z5, 3)), gfo::DimMismatch);
}

TEST_CASE("(AB)^T = B^T A^T") {
    std::mt19937_64 rng(4);
    for (const auto& fx : lemma_fields()) {
        const Field f = make_field(fx);
        const Matrix a = random_matrix(f, 3, 4, rng);
        const Matrix b = random_matrix(f, 4, 2, rng);
        CHECK(gfo::transpose(a * b) == gfo::transpose(b) * gfo::transpose(a));
    }
}

TEST_CASE("kronecker product") {
    const Field z5(5);
    std::mt19937_64 rng(5);
    const Matrix m = random_matrix(z5, 2, 2, rng);

    const Matrix block_diag = gfo::kronecker(gfo::identity(z5, 2), m);
    for (std::int64_t i = 0; i < 2; ++i)
        for (std::int64_t j = 0; j < 2; ++j) {
            CHECK(block_diag.index_at(i, j) == m.index_at(i, j));
            CHECK(block_diag.index_at(2 + i, 2 + j) == m.index_at(i, j));
            CHECK(block_diag.index_at(i, 2 + j) == 0);
            CHECK(block_diag.index_at(2 + i, j) == 0);
        }

    Matrix h2(z5, 2, 2), one(z5, 1, 1);
    h2.set_index(0, 0, 1);
    h2.set_index(0, 1, 1);
    h2.set_index(1, 0, 1);
    h2.set_index(1, 1, 4);
    one.set_index(0, 0, 1);
    CHECK(gfo::kronecker(h2, one) == h2);

    // mixed product: (A x B)(C x D) = (AC) x (BD)
    for (const auto& fx : lemma_fields()) {
        const Field f = make_field(fx);
        const Matrix a = random_matrix(f, 2, 2, rng);
        const Matrix b = random_matrix(f, 3, 3, rng);
        const Matrix c = random_matrix(f, 2, 2, rng);
        const Matrix d = random_matrix(f, 3, 3, rng);
        CHECK(gfo::kronecker(a, b) * gfo::kronecker(c, d) == gfo::kronecker(a * c, b * d));
    }
}

TEST_CASE("gram and weight") {
    const Field z5(5);
    CHECK(gfo::gram(gfo::identity(z5, 4)) == gfo::identity(z5, 4));
    CHECK(gfo::weight_of(gfo::identity(z5, 4))->index() == 1);

    Matrix upper(z5, 2, 2);
    upper.set_index(0, 0, 1);
    upper.set_index(0, 1, 1);
    upper.set_index(1, 1, 1);
    // Gram = [[2,1],[1,1]] is not scalar
    const Matrix g = gfo::gram(upper);
    CHECK(g.index_at(0, 0) == 2);
    CHECK(g.index_at(0, 1) == 1);
    CHECK_FALSE(gfo::weight_of(upper).has_value());

    CHECK_THROWS_AS((void)gfo::gram(Matrix(z5, 2, 3)), gfo::DimMismatch);

    // weight_of(A) = k exactly when the naive Gram is k I
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(z5, 3, 3, rng);
        const auto w = gfo::weight_of(a);
        if (w) {
            CHECK(naive_is_scalar_gram(a, w->index()));
        } else {
            bool scalar = false;
            for (std::int64_t k = 0; k < 5 && !scalar; ++k)
                scalar = naive_is_scalar_gram(a, k);
            CHECK_FALSE(scalar);
        }
    }
}

TEST_CASE("matrix-vector product") {
    const Field z5(5);
    Matrix a(z5, 2, 2);
    a.set_index(0, 0, 1);
    a.set_index(0, 1, 2);
    a.set_index(1, 0, 3);
    a.set_index(1, 1, 4);
    const std::vector<gfo::Elem> v{z5.elem(1), z5.elem(2)};
    const auto out = a * v;
    CHECK(out[0].index() == 0);  // 1+4 = 5
    CHECK(out[1].index() == 1);  // 3+8 = 11
    CHECK_THROWS_AS((void)(a * std::vector<gfo::Elem>{z5.elem(1)}), gfo::DimMismatch);
}

TEST_CASE("text format round trip and errors") {
    const Field z5(5);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix m = random_matrix(z5, 1 + static_cast<std::int64_t>(rng() % 5),
                                       1 + static_cast<std::int64_t>(rng() % 5), rng);
        CHECK(Matrix::from_text(z5, m.to_text()) == m);
    }

    const Matrix m = Matrix::from_text(z5, "2 2\n0 1\n2 3\n");
    CHECK(m.index_at(1, 0) == 2);

    CHECK_THROWS_AS((void)Matrix::from_text(z5, ""), gfo::ParseError);
    CHECK_THROWS_AS((void)Matrix::from_text(z5, "2 2\n0 1\n2"), gfo::ParseError);
    CHECK_THROWS_AS((void)Matrix::from_text(z5, "2 2\n0 1\n2 9\n"), gfo::ParseError);
    CHECK_THROWS_AS((void)Matrix::from_text(z5, "2 2\n0 1\n2 x\n"), gfo::ParseError);

    try {
        (void)Matrix::from_text(z5, "2 2\n0 1\n2 9\n");
        FAIL("expected ParseError");
    } catch (const gfo::ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
}
