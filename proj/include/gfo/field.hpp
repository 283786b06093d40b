#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfo/errors.hpp"

namespace gfo {

class Elem;

/// Immutable description of a finite field GF(p^alpha).
///
/// Elements are addressed by a canonical index in [0, q): the base-p digits
/// of the index are the coefficients of the element's polynomial
/// representation, least significant digit first. Index 0 is the additive
/// identity, index 1 the multiplicative identity, and for alpha > 1 index p
/// is the polynomial x. The modulus polynomial must be primitive, so x
/// generates the multiplicative group; multiplication in extension fields
/// runs on discrete-log tables built from powers of x at construction time.
///
/// A Field must outlive every Elem and Matrix that references it. All
/// methods are const and safe to call concurrently.
class Field {
public:
    /// Builds Z_p when alpha == 1 (poly must be empty) or GF(p^alpha) from a
    /// monic primitive polynomial c_0..c_alpha (constant term first).
    explicit Field(std::int64_t p, std::int64_t alpha = 1, std::vector<std::int64_t> poly = {});

    std::int64_t characteristic() const { return p_; }
    std::int64_t degree() const { return alpha_; }
    std::int64_t order() const { return q_; }

    /// Coefficients c_0..c_alpha of the modulus polynomial; empty for alpha == 1.
    const std::vector<std::int64_t>& modulus_poly() const { return poly_; }

    Elem elem(std::int64_t index) const;
    Elem zero() const;
    Elem one() const;
    /// Embeds an integer as the constant n mod p (accepts negatives, e.g. -1).
    Elem from_int(std::int64_t n) const;
    /// Smallest-index generator of the multiplicative group.
    Elem primitive_root() const;

    /// True when the other field is the same object or has identical (p, alpha, poly).
    bool same_as(const Field& other) const;

    /// Single-token description, e.g. "GF(89)" or "GF(3^2)".
    std::string describe() const;

    // Index-level arithmetic. These are the kernels behind Elem operators and
    // the dense matrix routines; indices must already be in [0, q).
    std::int64_t add_idx(std::int64_t a, std::int64_t b) const;
    std::int64_t sub_idx(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_idx(std::int64_t a) const;
    std::int64_t mul_idx(std::int64_t a, std::int64_t b) const;
    std::int64_t inv_idx(std::int64_t a) const;
    /// a^k with k >= 0; 0^0 is defined as 1.
    std::int64_t pow_idx(std::int64_t a, std::int64_t k) const;

private:
    std::int64_t find_primitive_root() const;
    void build_log_tables();
    std::int64_t mul_by_x_idx(std::int64_t a) const;

    std::int64_t p_ = 0;
    std::int64_t alpha_ = 1;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> poly_;
    std::int64_t primitive_root_ = 1;
    // discrete-log tables over the generator x, alpha > 1 only
    std::vector<std::int32_t> exp_;
    std::vector<std::int32_t> log_;
};

/// A single field element: a canonical index bound to its Field.
/// Values are immutable; operations on elements of different fields throw
/// FieldMismatch.
class Elem {
public:
    std::int64_t index() const { return index_; }
    const Field& field() const { return *field_; }
    bool is_zero() const { return index_ == 0; }

    Elem operator-() const;
    Elem inverse() const;
    Elem pow(std::int64_t k) const;

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
    friend class Field;
    Elem(const Field* f, std::int64_t index) : field_(f), index_(index) {}

    const Field* field_;
    std::int64_t index_;
};

/// Sum of a_i^k over all q elements of the field. Zero for 1 <= k < q-1,
/// and -1 at the boundary k = q-1.
Elem power_sum(const Field& f, std::int64_t k);

/// Smallest-index r with r*r == k, if any. Exhaustive search over the field.
std::optional<Elem> sqrt_in_field(const Elem& k);

bool is_quadratic_residue(const Elem& k);

/// Lexicographically smallest (r, s) by index with r^2 + s^2 == k.
/// Every element of a finite field has such a decomposition.
std::pair<Elem, Elem> sum_of_two_squares(const Elem& k);

}  // namespace gfo
