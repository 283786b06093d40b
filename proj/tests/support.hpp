#pragma once

// Shared fixtures and independent oracles. The oracles deliberately avoid the
// library's fast paths: extension-field products are recomputed by schoolbook
// polynomial arithmetic on digit vectors, and matrix identities are checked by
// raw triple loops over index arithmetic.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gfo/field.hpp"
#include "gfo/matrix.hpp"

namespace testsupport {

struct FieldFixture {
    std::int64_t q;
    std::int64_t p;
    std::int64_t alpha;
    std::vector<std::int64_t> poly;
};

// Primitive polynomials for the extension fields used across the suites.
inline const std::vector<FieldFixture>& lemma_fields() {
    static const std::vector<FieldFixture> fixtures = {
        {4, 2, 2, {1, 1, 1}},      // x^2 + x + 1
        {5, 5, 1, {}},
        {7, 7, 1, {}},
        {8, 2, 3, {1, 1, 0, 1}},   // x^3 + x + 1
        {9, 3, 2, {2, 1, 1}},      // x^2 + x + 2
        {11, 11, 1, {}},
        {13, 13, 1, {}},
        {25, 5, 2, {2, 1, 1}},     // x^2 + x + 2
    };
    return fixtures;
}

inline gfo::Field make_field(const FieldFixture& fx) {
    return gfo::Field(fx.p, fx.alpha, fx.poly);
}

// ---- scalar oracle: digit-vector polynomial arithmetic ----

inline std::vector<std::int64_t> digits_of(std::int64_t index, std::int64_t p,
                                           std::int64_t alpha) {
    std::vector<std::int64_t> d(alpha);
    for (std::int64_t i = 0; i < alpha; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

inline std::int64_t index_of(const std::vector<std::int64_t>& d, std::int64_t p) {
    std::int64_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

// Schoolbook product of two elements, reduced modulo the field polynomial.
inline std::int64_t slow_mul(const gfo::Field& f, std::int64_t a, std::int64_t b) {
    const std::int64_t p = f.characteristic(), alpha = f.degree();
    if (alpha == 1) return a * b % p;
    const auto da = digits_of(a, p, alpha), db = digits_of(b, p, alpha);
    std::vector<std::int64_t> prod(2 * alpha - 1, 0);
    for (std::int64_t i = 0; i < alpha; ++i)
        for (std::int64_t j = 0; j < alpha; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& poly = f.modulus_poly();
    for (std::int64_t d = 2 * alpha - 2; d >= alpha; --d) {
        const std::int64_t c = prod[d];
        if (c == 0) continue;
        for (std::int64_t k = 0; k <= alpha; ++k)
            prod[d - alpha + k] = ((prod[d - alpha + k] - c * poly[k]) % p + p) % p;
    }
    prod.resize(alpha);
    return index_of(prod, p);
}

inline std::int64_t slow_pow(const gfo::Field& f, std::int64_t a, std::int64_t k) {
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < k; ++i) acc = slow_mul(f, acc, a);
    return acc;
}

// ---- matrix oracles: raw loops, no Matrix operators ----

inline bool naive_is_scalar_gram(const gfo::Matrix& a, std::int64_t k) {
    const gfo::Field& f = a.field();
    const std::int64_t n = a.rows();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            std::int64_t dot = 0;
            for (std::int64_t t = 0; t < n; ++t)
                dot = f.add_idx(dot, f.mul_idx(a.index_at(i, t), a.index_at(j, t)));
            if (dot != (i == j ? k : 0)) return false;
        }
    return true;
}

inline gfo::Matrix naive_matmul(const gfo::Matrix& a, const gfo::Matrix& b) {
    const gfo::Field& f = a.field();
    gfo::Matrix out(f, a.rows(), b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < b.cols(); ++j) {
            std::int64_t acc = 0;
            for (std::int64_t t = 0; t < a.cols(); ++t)
                acc = f.add_idx(acc, f.mul_idx(a.index_at(i, t), b.index_at(t, j)));
            out.set_index(i, j, acc);
        }
    return out;
}

inline gfo::Matrix random_matrix(const gfo::Field& f, std::int64_t rows, std::int64_t cols,
                                 std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, f.order() - 1);
    gfo::Matrix m(f, rows, cols);
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::int64_t j = 0; j < cols; ++j) m.set_index(i, j, dist(rng));
    return m;
}

}  // namespace testsupport
