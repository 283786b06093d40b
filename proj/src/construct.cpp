#include "gfo/construct.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace gfo {

std::int64_t max_exponent(const Field& f) {
    const std::int64_t m = (f.order() - 2) / 2;
    return m > 0 ? m : 0;
}

bool exponent_valid(const Field& f, std::int64_t t) {
    return t >= 1 && 2 * t <= f.order() - 2;
}

Matrix self_orthogonal(const Field& f, std::int64_t t) {
    if (!exponent_valid(f, t)) throw BadExponent(t, f.order());
    const std::int64_t q = f.order();
    std::vector<std::int64_t> z(q);
    for (std::int64_t i = 0; i < q; ++i) z[i] = f.pow_idx(i, t);
    Matrix a(f, q, q);
    for (std::int64_t i = 0; i < q; ++i)
        for (std::int64_t j = 0; j < q; ++j) a.set_index(i, j, f.sub_idx(z[j], z[i]));
    return a;
}

Matrix weighted_orthogonal(const Field& f, std::int64_t t, const Elem& r) {
    if (!r.field().same_as(f)) throw FieldMismatch();
    if (r.is_zero()) throw ZeroScale();
    Matrix w = self_orthogonal(f, t);
    for (std::int64_t i = 0; i < w.rows(); ++i)
        w.set_index(i, i, f.add_idx(w.index_at(i, i), r.index()));
    return w;
}

Matrix anti_orthogonal(const Field& f, std::int64_t t) {
    const std::optional<Elem> r = sqrt_in_field(f.from_int(-1));
    if (!r) throw NoAntiRoot(f.describe());
    return weighted_orthogonal(f, t, *r);
}

Matrix block_2q(const Field& f, std::int64_t t1, std::int64_t t2, const Elem& k) {
    if (!k.field().same_as(f)) throw FieldMismatch();
    if (!exponent_valid(f, t1)) throw BadExponent(t1, f.order());
    if (!exponent_valid(f, t2)) throw BadExponent(t2, f.order());
    if (t1 + t2 > f.order() - 2) throw ExponentPairTooLarge(t1, t2, f.order());

    const auto [r, s] = sum_of_two_squares(k);
    const std::int64_t q = f.order();
    Matrix a = self_orthogonal(f, t1);
    Matrix b = self_orthogonal(f, t2);
    for (std::int64_t i = 0; i < q; ++i) {
        a.set_index(i, i, f.add_idx(a.index_at(i, i), r.index()));
        b.set_index(i, i, f.add_idx(b.index_at(i, i), s.index()));
    }
    Matrix out(f, 2 * q, 2 * q);
    for (std::int64_t i = 0; i < q; ++i) {
        for (std::int64_t j = 0; j < q; ++j) {
            out.set_index(i, j, a.index_at(i, j));
            out.set_index(i, q + j, b.index_at(i, j));
            out.set_index(q + i, j, f.neg_idx(b.index_at(j, i)));
            out.set_index(q + i, q + j, a.index_at(j, i));
        }
    }
    return out;
}

namespace {

// Sylvester doubling at the sign level: H_1 = [1], H_2m = [[H, H], [H, -H]].
std::vector<std::vector<int>> sylvester_signs(std::int64_t m) {
    std::vector<std::vector<int>> h{{1}};
    while (static_cast<std::int64_t>(h.size()) < m) {
        const std::size_t n = h.size();
        std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = h[i][j];
                next[i][j + n] = h[i][j];
                next[i + n][j] = h[i][j];
                next[i + n][j + n] = -h[i][j];
            }
        h = std::move(next);
    }
    return h;
}

Matrix embed_signs(const Field& f, const std::vector<std::vector<int>>& signs) {
    const std::int64_t n = static_cast<std::int64_t>(signs.size());
    const std::int64_t minus_one = f.from_int(-1).index();
    Matrix out(f, n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            out.set_index(i, j, signs[i][j] == 1 ? 1 : minus_one);
    return out;
}

}  // namespace

Matrix hadamard_sylvester(const Field& f, std::int64_t m) {
    if (m < 2 || (m & (m - 1)) != 0) throw NotPowerOfTwo(m);
    return embed_signs(f, sylvester_signs(m));
}

Matrix parse_hadamard(const Field& f, std::string_view text) {
    // Sign alphabet is +1/-1, not element indices, so this has its own scanner
    // with the same line/column conventions as Matrix::from_text.
    std::vector<std::vector<int>> signs;
    std::int64_t rows = -1, cols = -1;
    std::int64_t line = 1, col = 1;
    std::size_t i = 0;
    std::vector<int> flat;
    std::vector<std::pair<std::int64_t, std::int64_t>> positions;
    std::int64_t header[2] = {-1, -1};
    int header_seen = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line, col = 1, ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col, ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const std::string tok(text.substr(i, j - i));
        std::int64_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got \"" + tok + "\"", line, col);
        }
        if (header_seen < 2) {
            header[header_seen++] = value;
        } else {
            if (value != 1 && value != -1)
                throw ParseError("Hadamard entries must be +1 or -1, got " + tok, line, col);
            flat.push_back(static_cast<int>(value));
            positions.emplace_back(line, col);
        }
        col += static_cast<std::int64_t>(j - i);
        i = j;
    }
    if (header_seen < 2) throw ParseError("missing \"rows cols\" header", 1, 1);
    rows = header[0], cols = header[1];
    if (rows != cols) throw NotHadamard("matrix is not square");
    if (rows < 1) throw ParseError("matrix dimensions must be >= 1", 1, 1);
    if (rows > 4096) throw ParseError("matrix too large", 1, 1);
    if (static_cast<std::int64_t>(flat.size()) != rows * cols)
        throw ParseError("expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(flat.size()),
                         line, col);
    signs.assign(rows, std::vector<int>(cols));
    for (std::int64_t k = 0; k < rows * cols; ++k) signs[k / cols][k % cols] = flat[k];

    // H H^T = n I over the integers.
    for (std::int64_t r = 0; r < rows; ++r) {
        for (std::int64_t s = 0; s < rows; ++s) {
            std::int64_t dot = 0;
            for (std::int64_t t = 0; t < cols; ++t) dot += signs[r][t] * signs[s][t];
            if (dot != (r == s ? rows : 0))
                throw NotHadamard("rows " + std::to_string(r) + " and " + std::to_string(s) +
                                  " have inner product " + std::to_string(dot));
        }
    }
    return embed_signs(f, signs);
}

Matrix load_hadamard(const Field& f, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_hadamard(f, ss.str());
}

Matrix kron_weighted(const Matrix& h, const Matrix& w) {
    if (!weight_of(h)) throw NotWeighted("left factor");
    if (!weight_of(w)) throw NotWeighted("right factor");
    return kronecker(h, w);
}

}  // namespace gfo
