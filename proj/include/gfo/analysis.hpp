#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gfo/cipher.hpp"
#include "gfo/matrix.hpp"

namespace gfo {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::string detail;  // counterexample on failure, reason on skip
    std::int64_t millis = 0;
};

/// Per-field verification transcript: one entry per construction theorem.
struct VerificationReport {
    std::string field_desc;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string text() const;
    /// One line per check: "field=<desc> check=<name> status=<s> ms=<n>".
    std::string machine_text() const;
};

/// Machine-checks every construction property on the given field: power-sum
/// lemma, self-orthogonality, weights of A+rI, anti-orthogonality existence,
/// pairwise product vanishing, order-2q any-weight blocks, and the
/// Hadamard-Kronecker product. Fields too small for any valid exponent get
/// skip entries. Exhaustive in (t, r, k) for small fields; larger fields are
/// spot-checked on a fixed parameter sample (noted in the detail string).
VerificationReport verify_field(const Field& f);

/// Key-space arithmetic: the count of q x q matrices over GF(q) is q^(q^2)
/// (reported as its decimal logarithm) while the scheme's parameters (t, r)
/// span only floor((q-2)/2) * (q-1) pairs.
struct KeyspaceFigures {
    std::int64_t q = 0;
    double matrix_space_log10 = 0.0;
    std::int64_t valid_exponents = 0;
    std::int64_t parameter_space = 0;

    /// Both counts side by side, e.g.
    /// "q=89: log10(#matrices)=15441.1, (t,r) pairs=3784 (43 exponents x 88 scales)".
    std::string text() const;
};

KeyspaceFigures keyspace_figures(std::int64_t q);

/// Exhaustive known-plaintext search: every (t, r) whose key matrix maps the
/// known message block to the known cipher block. The generating parameters
/// are always in the returned list.
std::vector<std::pair<std::int64_t, std::int64_t>> parameter_search(
    const Field& f, const std::vector<Elem>& known_plain, const std::vector<Elem>& known_cipher);

}  // namespace gfo
