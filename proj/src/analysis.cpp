#include "gfo/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "gfo/construct.hpp"

namespace gfo {

namespace {

// Exhaustive parameter sweeps stay affordable up to this order; beyond it
// verify_field samples a fixed parameter subset instead.
constexpr std::int64_t kExhaustiveOrderLimit = 30;

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skip";
    }
}

struct Checker {
    const Field& f;
    VerificationReport& report;

    void run(const std::string& name, const std::function<CheckResult()>& body) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = body();
        } catch (const std::exception& e) {
            r.status = CheckStatus::fail;
            r.detail = std::string("exception: ") + e.what();
        }
        r.name = name;
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
        report.checks.push_back(std::move(r));
    }
};

CheckResult pass(std::string detail = "") { return {"", CheckStatus::pass, std::move(detail), 0}; }
CheckResult fail(std::string detail) { return {"", CheckStatus::fail, std::move(detail), 0}; }
CheckResult skip(std::string detail) { return {"", CheckStatus::skip, std::move(detail), 0}; }

std::vector<std::int64_t> sweep_exponents(const Field& f) {
    const std::int64_t tmax = max_exponent(f);
    std::vector<std::int64_t> ts;
    if (f.order() <= kExhaustiveOrderLimit) {
        for (std::int64_t t = 1; t <= tmax; ++t) ts.push_back(t);
    } else {
        ts = {1, 2, tmax};
    }
    return ts;
}

std::vector<std::int64_t> sweep_scales(const Field& f) {
    std::vector<std::int64_t> rs;
    if (f.order() <= kExhaustiveOrderLimit) {
        for (std::int64_t r = 1; r < f.order(); ++r) rs.push_back(r);
    } else {
        rs = {1, 2, f.order() - 1};
    }
    return rs;
}

std::string coverage_note(const Field& f) {
    return f.order() <= kExhaustiveOrderLimit ? "exhaustive parameter sweep"
                                              : "sampled parameter sweep";
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string VerificationReport::text() const {
    std::string s = field_desc + "\n";
    for (const CheckResult& c : checks) {
        s += "  [" + std::string(status_str(c.status)) + "] " + c.name;
        if (!c.detail.empty()) s += " - " + c.detail;
        s += " (" + std::to_string(c.millis) + " ms)\n";
    }
    return s;
}

std::string VerificationReport::machine_text() const {
    std::string s;
    for (const CheckResult& c : checks) {
        s += "field=" + field_desc + " check=" + c.name + " status=" + status_str(c.status) +
             " ms=" + std::to_string(c.millis) + "\n";
    }
    return s;
}

VerificationReport verify_field(const Field& f) {
    VerificationReport report;
    report.field_desc = f.describe();
    Checker ck{f, report};
    const std::int64_t q = f.order();
    const std::int64_t tmax = max_exponent(f);
    const std::string no_exponent = "no valid exponent t (needs q >= 4)";

    ck.run("lemma_power_sums", [&]() -> CheckResult {
        for (std::int64_t k = 1; k < q - 1; ++k) {
            const Elem s = power_sum(f, k);
            if (!s.is_zero()) return fail("power_sum(k=" + std::to_string(k) + ") = " +
                                          std::to_string(s.index()) + ", expected 0");
        }
        if (q >= 2 && power_sum(f, q - 1) != f.from_int(-1))
            return fail("power_sum(q-1) != -1");
        return pass("k swept over [1, q-1]");
    });

    ck.run("self_orthogonal_construction", [&]() -> CheckResult {
        if (tmax == 0) return skip(no_exponent);
        for (std::int64_t t : sweep_exponents(f)) {
            const Matrix a = self_orthogonal(f, t);
            const std::optional<Elem> w = weight_of(a);
            if (!w || !w->is_zero()) return fail("t=" + std::to_string(t) + ": Gram not zero");
            for (std::int64_t i = 0; i < q; ++i) {
                if (a.index_at(i, i) != 0)
                    return fail("t=" + std::to_string(t) + ": nonzero diagonal at " +
                                std::to_string(i));
                for (std::int64_t j = 0; j < q; ++j) {
                    if (a.index_at(i, j) != f.neg_idx(a.index_at(j, i)))
                        return fail("t=" + std::to_string(t) + ": not skew at (" +
                                    std::to_string(i) + "," + std::to_string(j) + "): " +
                                    std::to_string(a.index_at(i, j)) + " vs -" +
                                    std::to_string(a.index_at(j, i)));
                    const std::int64_t want = f.sub_idx(f.pow_idx(j, t), f.pow_idx(i, t));
                    if (a.index_at(i, j) != want)
                        return fail("t=" + std::to_string(t) + ": entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") = " +
                                    std::to_string(a.index_at(i, j)) + ", formula gives " +
                                    std::to_string(want));
                }
            }
        }
        return pass(coverage_note(f));
    });

    ck.run("weighted_orthogonal_weight", [&]() -> CheckResult {
        if (tmax == 0) return skip(no_exponent);
        for (std::int64_t t : sweep_exponents(f)) {
            for (std::int64_t r : sweep_scales(f)) {
                const Elem rr = f.elem(r);
                const std::optional<Elem> w = weight_of(weighted_orthogonal(f, t, rr));
                if (!w || *w != rr * rr)
                    return fail("t=" + std::to_string(t) + " r=" + std::to_string(r) +
                                ": weight != r^2");
            }
        }
        return pass(coverage_note(f));
    });

    ck.run("anti_orthogonal_existence", [&]() -> CheckResult {
        if (tmax == 0) return skip(no_exponent);
        const bool has_root = sqrt_in_field(f.from_int(-1)).has_value();
        try {
            const Matrix b = anti_orthogonal(f, 1);
            if (!has_root) return fail("anti_orthogonal succeeded without a root of -1");
            const std::optional<Elem> w = weight_of(b);
            if (!w || *w != f.from_int(-1)) return fail("weight != -1");
        } catch (const NoAntiRoot&) {
            if (has_root) return fail("anti_orthogonal refused although -1 is a square");
            return pass("-1 is not a quadratic residue here; construction correctly refuses");
        }
        return pass("weight -1 confirmed");
    });

    ck.run("product_vanishing", [&]() -> CheckResult {
        if (tmax == 0) return skip(no_exponent);
        const std::vector<std::int64_t> ts = sweep_exponents(f);
        for (std::int64_t t : ts) {
            const Matrix a = self_orthogonal(f, t);
            for (std::int64_t s : ts) {
                if (t + s > q - 2) continue;
                const Matrix b = self_orthogonal(f, s);
                const Matrix ab = a * b;
                for (std::int64_t i = 0; i < q; ++i)
                    for (std::int64_t j = 0; j < q; ++j)
                        if (ab.index_at(i, j) != 0)
                            return fail("t=" + std::to_string(t) + " s=" + std::to_string(s) +
                                        ": product entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") = " +
                                        std::to_string(ab.index_at(i, j)));
            }
        }
        return pass(coverage_note(f));
    });

    ck.run("block_any_weight", [&]() -> CheckResult {
        if (tmax == 0) return skip(no_exponent);
        std::vector<std::int64_t> ks;
        if (q <= kExhaustiveOrderLimit) {
            for (std::int64_t k = 0; k < q; ++k) ks.push_back(k);
        } else {
            ks = {0, 1, 2, q - 1};
        }
        for (std::int64_t k : ks) {
            const Elem kk = f.elem(k);
            const Matrix m = block_2q(f, 1, 1, kk);
            if (m.rows() != 2 * q) return fail("order != 2q");
            const std::optional<Elem> w = weight_of(m);
            if (!w || *w != kk) return fail("k=" + std::to_string(k) + ": weight != k");
        }
        return pass(coverage_note(f));
    });

    ck.run("hadamard_kronecker", [&]() -> CheckResult {
        if (tmax == 0) return skip(no_exponent);
        const Matrix h = hadamard_sylvester(f, 4);
        const Matrix w = weighted_orthogonal(f, 1, f.one());
        const Matrix k = kron_weighted(h, w);
        if (k.rows() != 4 * q) return fail("order != 4q");
        const std::optional<Elem> kw = weight_of(k);
        const Elem expect = f.from_int(4);  // 4 * r^2 with r = 1
        if (!kw || *kw != expect)
            return fail("weight != 4 mod p");
        return pass("H_4 x (A+I), weight " + std::to_string(expect.index()));
    });

    return report;
}

std::string KeyspaceFigures::text() const {
    char log_buf[32];
    std::snprintf(log_buf, sizeof(log_buf), "%.1f", matrix_space_log10);
    return "q=" + std::to_string(q) + ": log10(#matrices)=" + log_buf +
           ", (t,r) pairs=" + std::to_string(parameter_space) + " (" +
           std::to_string(valid_exponents) + " exponents x " + std::to_string(q - 1) +
           " scales)";
}

KeyspaceFigures keyspace_figures(std::int64_t q) {
    if (q < 4) throw InvalidArgument("key-space figures need q >= 4");
    KeyspaceFigures fig;
    fig.q = q;
    fig.matrix_space_log10 =
        static_cast<double>(q) * static_cast<double>(q) * std::log10(static_cast<double>(q));
    fig.valid_exponents = (q - 2) / 2;
    fig.parameter_space = fig.valid_exponents * (q - 1);
    return fig;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parameter_search(
    const Field& f, const std::vector<Elem>& known_plain, const std::vector<Elem>& known_cipher) {
    const std::int64_t q = f.order();
    if (static_cast<std::int64_t>(known_plain.size()) != q ||
        static_cast<std::int64_t>(known_cipher.size()) != q)
        throw DimMismatch("known blocks must have length q");
    std::vector<std::pair<std::int64_t, std::int64_t>> hits;
    for (std::int64_t t = 1; t <= max_exponent(f); ++t) {
        const Matrix a = self_orthogonal(f, t);
        const std::vector<Elem> am = a * known_plain;
        for (std::int64_t r = 1; r < q; ++r) {
            bool match = true;
            for (std::int64_t i = 0; i < q && match; ++i) {
                const std::int64_t ci =
                    f.add_idx(am[i].index(), f.mul_idx(r, known_plain[i].index()));
                match = ci == known_cipher[i].index();
            }
            if (match) hits.emplace_back(t, r);
        }
    }
    return hits;
}

}  // namespace gfo
