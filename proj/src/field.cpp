#include "gfo/field.hpp"

#include <algorithm>
#include <numeric>

namespace gfo {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Remainder of num modulo the monic polynomial den, coefficients mod p.
// Both are coefficient vectors, constant term first.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> num,
                                   const std::vector<std::int64_t>& den, std::int64_t p) {
    const std::int64_t d = static_cast<std::int64_t>(den.size()) - 1;
    for (std::int64_t i = static_cast<std::int64_t>(num.size()) - 1; i >= d; --i) {
        const std::int64_t c = num[i];
        if (c == 0) continue;
        for (std::int64_t k = 0; k <= d; ++k) {
            num[i - d + k] = ((num[i - d + k] - c * den[k]) % p + p) % p;
        }
    }
    num.resize(d > 0 ? d : 1);
    return num;
}

bool poly_is_zero(const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2. Exhaustive,
// which is fine at the field orders this library targets.
bool poly_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p) {
    const std::int64_t deg = static_cast<std::int64_t>(poly.size()) - 1;
    for (std::int64_t d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (std::int64_t i = 0; i < d; ++i) count *= p;
        for (std::int64_t tag = 0; tag < count; ++tag) {
            std::vector<std::int64_t> div(d + 1, 0);
            std::int64_t v = tag;
            for (std::int64_t i = 0; i < d; ++i) {
                div[i] = v % p;
                v /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(poly, div, p))) return false;
        }
    }
    return true;
}

std::string poly_to_string(const std::vector<std::int64_t>& poly) {
    std::string s;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(poly[i]);
    }
    return s;
}

}  // namespace

Field::Field(std::int64_t p, std::int64_t alpha, std::vector<std::int64_t> poly)
    : p_(p), alpha_(alpha), poly_(std::move(poly)) {
    if (p_ > kMaxOrder) throw InvalidArgument("field order exceeds supported maximum");
    if (!is_prime(p_)) throw NotPrime(p_);
    if (alpha_ < 1) throw InvalidArgument("extension degree must be >= 1");
    if (alpha_ == 1 && !poly_.empty()) throw SpuriousPoly();
    if (alpha_ > 1 && poly_.empty()) throw MissingPoly();

    q_ = 1;
    for (std::int64_t i = 0; i < alpha_; ++i) {
        q_ *= p_;
        if (q_ > kMaxOrder) throw InvalidArgument("field order exceeds supported maximum");
    }

    if (alpha_ > 1) {
        if (static_cast<std::int64_t>(poly_.size()) != alpha_ + 1)
            throw InvalidArgument("modulus polynomial needs exactly alpha+1 coefficients");
        for (std::int64_t c : poly_) {
            if (c < 0 || c >= p_)
                throw InvalidArgument("modulus polynomial coefficients must lie in [0, p)");
        }
        if (poly_.back() != 1) throw InvalidArgument("modulus polynomial must be monic");
        if (!poly_irreducible(poly_, p_))
            throw PolyNotIrreducible(poly_to_string(poly_) + " over Z_" + std::to_string(p_));
        build_log_tables();
    }

    primitive_root_ = find_primitive_root();
}

std::int64_t Field::mul_by_x_idx(std::int64_t a) const {
    // Shift digits up one place, then fold the overflow digit back in with
    // x^alpha == -(c_0 + c_1 x + ... + c_{alpha-1} x^{alpha-1}).
    std::vector<std::int64_t> d(alpha_, 0);
    for (std::int64_t i = 0; i < alpha_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    const std::int64_t carry = d[alpha_ - 1];
    for (std::int64_t i = alpha_ - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (carry != 0) {
        for (std::int64_t i = 0; i < alpha_; ++i) {
            d[i] = ((d[i] - carry * poly_[i]) % p_ + p_) % p_;
        }
    }
    std::int64_t out = 0;
    for (std::int64_t i = alpha_ - 1; i >= 0; --i) out = out * p_ + d[i];
    return out;
}

void Field::build_log_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    std::int64_t cur = 1;
    for (std::int64_t k = 0; k < q_ - 1; ++k) {
        if (log_[cur] != -1) {
            throw PolyNotPrimitive("x has multiplicative order " + std::to_string(k) +
                                   " < " + std::to_string(q_ - 1));
        }
        exp_[k] = static_cast<std::int32_t>(cur);
        log_[cur] = static_cast<std::int32_t>(k);
        cur = mul_by_x_idx(cur);
    }
    if (cur != 1) throw PolyNotPrimitive("x^(q-1) != 1");
}

std::int64_t Field::find_primitive_root() const {
    if (q_ == 2) return 1;  // the trivial group {1}
    if (alpha_ > 1) {
        // Order of the element with discrete log L is (q-1)/gcd(L, q-1).
        for (std::int64_t i = 2; i < q_; ++i) {
            if (std::gcd(static_cast<std::int64_t>(log_[i]), q_ - 1) == 1) return i;
        }
        throw Error("internal: no primitive root found");
    }
    // alpha == 1: factor p-1 once, then test each candidate on the prime
    // cofactors only.
    std::vector<std::int64_t> prime_factors;
    std::int64_t m = q_ - 1;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (std::int64_t g = 2; g < q_; ++g) {
        bool generates = true;
        for (std::int64_t r : prime_factors) {
            if (pow_idx(g, (q_ - 1) / r) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw Error("internal: no primitive root found");
}

Elem Field::elem(std::int64_t index) const {
    if (index < 0 || index >= q_)
        throw InvalidArgument("element index " + std::to_string(index) +
                              " out of range [0, " + std::to_string(q_) + ")");
    return Elem(this, index);
}

Elem Field::zero() const { return Elem(this, 0); }
Elem Field::one() const { return Elem(this, 1); }

Elem Field::from_int(std::int64_t n) const { return Elem(this, ((n % p_) + p_) % p_); }

Elem Field::primitive_root() const { return Elem(this, primitive_root_); }

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && alpha_ == other.alpha_ && poly_ == other.poly_;
}

std::string Field::describe() const {
    if (alpha_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(alpha_) + ")";
}

std::int64_t Field::add_idx(std::int64_t a, std::int64_t b) const {
    if (alpha_ == 1) return (a + b) % p_;
    std::int64_t out = 0, place = 1;
    for (std::int64_t i = 0; i < alpha_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::int64_t Field::neg_idx(std::int64_t a) const {
    if (alpha_ == 1) return (p_ - a) % p_;
    std::int64_t out = 0, place = 1;
    for (std::int64_t i = 0; i < alpha_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

std::int64_t Field::sub_idx(std::int64_t a, std::int64_t b) const {
    return add_idx(a, neg_idx(b));
}

std::int64_t Field::mul_idx(std::int64_t a, std::int64_t b) const {
    if (alpha_ == 1) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::int64_t Field::inv_idx(std::int64_t a) const {
    if (a == 0) throw ZeroInverse();
    if (alpha_ == 1) {
        // extended Euclid on (a, p)
        std::int64_t r0 = a, r1 = p_, s0 = 1, s1 = 0;
        while (r1 != 0) {
            const std::int64_t qt = r0 / r1;
            r0 -= qt * r1;
            std::swap(r0, r1);
            s0 -= qt * s1;
            std::swap(s0, s1);
        }
        return ((s0 % p_) + p_) % p_;
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::int64_t Field::pow_idx(std::int64_t a, std::int64_t k) const {
    if (k < 0) throw InvalidArgument("exponent must be non-negative");
    if (k == 0) return 1;  // includes 0^0 = 1
    if (a == 0) return 0;
    if (alpha_ > 1) {
        return exp_[(log_[a] * (k % (q_ - 1))) % (q_ - 1)];
    }
    std::int64_t base = a, acc = 1;
    while (k > 0) {
        if (k & 1) acc = (acc * base) % p_;
        base = (base * base) % p_;
        k >>= 1;
    }
    return acc;
}

namespace {
const Field& common_field(const Elem& a, const Elem& b) {
    if (!a.field().same_as(b.field())) throw FieldMismatch();
    return a.field();
}
}  // namespace

Elem Elem::operator-() const { return field_->elem(field_->neg_idx(index_)); }

Elem Elem::inverse() const { return field_->elem(field_->inv_idx(index_)); }

Elem Elem::pow(std::int64_t k) const { return field_->elem(field_->pow_idx(index_, k)); }

Elem operator+(const Elem& a, const Elem& b) {
    const Field& f = common_field(a, b);
    return f.elem(f.add_idx(a.index_, b.index_));
}

Elem operator-(const Elem& a, const Elem& b) {
    const Field& f = common_field(a, b);
    return f.elem(f.sub_idx(a.index_, b.index_));
}

Elem operator*(const Elem& a, const Elem& b) {
    const Field& f = common_field(a, b);
    return f.elem(f.mul_idx(a.index_, b.index_));
}

bool operator==(const Elem& a, const Elem& b) {
    common_field(a, b);
    return a.index_ == b.index_;
}

Elem power_sum(const Field& f, std::int64_t k) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i < f.order(); ++i) {
        acc = f.add_idx(acc, f.pow_idx(i, k));
    }
    return f.elem(acc);
}

std::optional<Elem> sqrt_in_field(const Elem& k) {
    const Field& f = k.field();
    for (std::int64_t r = 0; r < f.order(); ++r) {
        if (f.mul_idx(r, r) == k.index()) return f.elem(r);
    }
    return std::nullopt;
}

bool is_quadratic_residue(const Elem& k) { return sqrt_in_field(k).has_value(); }

std::pair<Elem, Elem> sum_of_two_squares(const Elem& k) {
    const Field& f = k.field();
    const std::int64_t q = f.order();
    // smallest s with s^2 == v, per square value v
    std::vector<std::int64_t> min_sqrt(q, -1);
    for (std::int64_t s = q - 1; s >= 0; --s) min_sqrt[f.mul_idx(s, s)] = s;
    for (std::int64_t r = 0; r < q; ++r) {
        const std::int64_t rest = f.sub_idx(k.index(), f.mul_idx(r, r));
        if (min_sqrt[rest] >= 0) return {f.elem(r), f.elem(min_sqrt[rest])};
    }
    throw Error("internal: no two-square decomposition found");
}

}  // namespace gfo
