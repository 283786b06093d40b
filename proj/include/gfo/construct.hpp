#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "gfo/matrix.hpp"

namespace gfo {

/// Largest valid construction exponent for the field: floor((q-2)/2).
/// Zero means the field is too small for any construction (q <= 3).
std::int64_t max_exponent(const Field& f);

bool exponent_valid(const Field& f, std::int64_t t);

/// The q x q matrix A with A[i][j] = a_j^t - a_i^t under the canonical
/// element enumeration. Self-orthogonal (A A^T = 0), skew-symmetric, zero
/// diagonal. Requires 1 <= t and 2t <= q-2.
Matrix self_orthogonal(const Field& f, std::int64_t t);

/// W = A + rI with A self-orthogonal; W W^T = r^2 I. Requires r != 0.
Matrix weighted_orthogonal(const Field& f, std::int64_t t, const Elem& r);

/// weighted_orthogonal with r the smallest square root of -1; W W^T = -I.
/// Throws NoAntiRoot when -1 is not a quadratic residue.
Matrix anti_orthogonal(const Field& f, std::int64_t t);

/// Order-2q block matrix [[A+rI, B+sI], [-(B+sI)^T, (A+rI)^T]] with
/// k = r^2 + s^2; its Gram matrix is k * I for any target weight k,
/// including k = 0 and k = 1.
Matrix block_2q(const Field& f, std::int64_t t1, std::int64_t t2, const Elem& k);

/// Sylvester-doubled Hadamard matrix of order m (a power of two, >= 2),
/// embedded into the field as 1 and p-1. Gram matrix is (m mod p) * I.
Matrix hadamard_sylvester(const Field& f, std::int64_t m);

/// Parses a matrix-text file whose entries are +1/-1, checks H H^T = n I
/// over the integers, and embeds the result into the field.
Matrix parse_hadamard(const Field& f, std::string_view text);
Matrix load_hadamard(const Field& f, const std::filesystem::path& path);

/// Kronecker product of two weighted orthogonal matrices; the result's
/// weight is the product of the factor weights. Throws NotWeighted when a
/// factor has no scalar Gram.
Matrix kron_weighted(const Matrix& h, const Matrix& w);

}  // namespace gfo
