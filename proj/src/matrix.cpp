#include "gfo/matrix.hpp"

#include <cctype>
#include <charconv>

namespace gfo {

namespace {

constexpr std::int64_t kMaxEntries = std::int64_t{1} << 24;

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field().same_as(b.field())) throw FieldMismatch();
}

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(const Field& f, std::int64_t rows, std::int64_t cols)
    : field_(&f), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("matrix dimensions must be >= 1");
    if (rows > kMaxEntries / cols) throw InvalidArgument("matrix too large");
    e_.assign(rows * cols, 0);
}

void Matrix::set(std::int64_t r, std::int64_t c, const Elem& v) {
    if (!v.field().same_as(*field_)) throw FieldMismatch();
    e_[r * cols_ + c] = v.index();
}

void Matrix::set_index(std::int64_t r, std::int64_t c, std::int64_t index) {
    if (index < 0 || index >= field_->order())
        throw InvalidArgument("entry index out of range");
    e_[r * cols_ + c] = index;
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix identity(const Field& f, std::int64_t n) {
    Matrix m(f, n, n);
    for (std::int64_t i = 0; i < n; ++i) m.set_index(i, i, 1);
    return m;
}

Matrix zero_matrix(const Field& f, std::int64_t rows, std::int64_t cols) {
    return Matrix(f, rows, cols);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw DimMismatch("cannot multiply " + shape(a) + " by " + shape(b));
    const Field& f = a.field();
    const std::int64_t n = a.rows(), k = a.cols(), m = b.cols();
    Matrix out(f, n, m);
    if (f.degree() == 1) {
        // Raw accumulation with a single reduction per entry. Bounded by the
        // order cap, so the int64 accumulator cannot overflow.
        const std::int64_t p = f.characteristic();
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t j = 0; j < m; ++j) {
                std::int64_t acc = 0;
                for (std::int64_t t = 0; t < k; ++t) {
                    acc += a.index_at(i, t) * b.index_at(t, j) % p;
                }
                out.set_index(i, j, acc % p);
            }
        }
        return out;
    }
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < m; ++j) {
            std::int64_t acc = 0;
            for (std::int64_t t = 0; t < k; ++t) {
                acc = f.add_idx(acc, f.mul_idx(a.index_at(i, t), b.index_at(t, j)));
            }
            out.set_index(i, j, acc);
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimMismatch("cannot add " + shape(a) + " and " + shape(b));
    const Field& f = a.field();
    Matrix out(f, a.rows(), a.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j)
            out.set_index(i, j, f.add_idx(a.index_at(i, j), b.index_at(i, j)));
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimMismatch("cannot subtract " + shape(b) + " from " + shape(a));
    const Field& f = a.field();
    Matrix out(f, a.rows(), a.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j)
            out.set_index(i, j, f.sub_idx(a.index_at(i, j), b.index_at(i, j)));
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.field(), a.cols(), a.rows());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) out.set_index(j, i, a.index_at(i, j));
    return out;
}

Matrix scalar_mul(const Elem& c, const Matrix& a) {
    if (!c.field().same_as(a.field())) throw FieldMismatch();
    const Field& f = a.field();
    Matrix out(f, a.rows(), a.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j)
            out.set_index(i, j, f.mul_idx(c.index(), a.index_at(i, j)));
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    const std::int64_t rb = b.rows(), cb = b.cols();
    Matrix out(f, a.rows() * rb, a.cols() * cb);
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            const std::int64_t aij = a.index_at(i, j);
            for (std::int64_t k = 0; k < rb; ++k)
                for (std::int64_t l = 0; l < cb; ++l)
                    out.set_index(i * rb + k, j * cb + l, f.mul_idx(aij, b.index_at(k, l)));
        }
    return out;
}

Matrix gram(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimMismatch("Gram matrix needs a square input, got " + shape(a));
    return a * transpose(a);
}

std::optional<Elem> weight_of(const Matrix& a) {
    const Matrix g = gram(a);
    const std::int64_t k = g.index_at(0, 0);
    for (std::int64_t i = 0; i < g.rows(); ++i)
        for (std::int64_t j = 0; j < g.cols(); ++j)
            if (g.index_at(i, j) != (i == j ? k : 0)) return std::nullopt;
    return a.field().elem(k);
}

std::vector<Elem> operator*(const Matrix& a, const std::vector<Elem>& v) {
    if (a.cols() != static_cast<std::int64_t>(v.size()))
        throw DimMismatch(shape(a) + " times vector of length " + std::to_string(v.size()));
    const Field& f = a.field();
    for (const Elem& x : v)
        if (!x.field().same_as(f)) throw FieldMismatch();
    std::vector<Elem> out;
    out.reserve(a.rows());
    for (std::int64_t i = 0; i < a.rows(); ++i) {
        std::int64_t acc = 0;
        for (std::int64_t j = 0; j < a.cols(); ++j)
            acc = f.add_idx(acc, f.mul_idx(a.index_at(i, j), v[j].index()));
        out.push_back(f.elem(acc));
    }
    return out;
}

// ---- text format ----

namespace {

struct Token {
    std::int64_t value;
    std::int64_t line;
    std::int64_t column;
};

// Splits text into integer tokens, tracking 1-based line/column positions.
std::vector<Token> tokenize_ints(std::string_view text) {
    std::vector<Token> out;
    std::int64_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::int64_t tok_line = line, tok_col = col;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::int64_t value = 0;
        const auto res = std::from_chars(text.data() + i, text.data() + j, value);
        if (res.ec != std::errc() || res.ptr != text.data() + j)
            throw ParseError("expected an integer, got \"" + std::string(text.substr(i, j - i)) +
                                 "\"",
                             tok_line, tok_col);
        out.push_back({value, tok_line, tok_col});
        col += static_cast<std::int64_t>(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string Matrix::to_text() const {
    std::string s = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (std::int64_t i = 0; i < rows_; ++i) {
        for (std::int64_t j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += std::to_string(index_at(i, j));
        }
        s += "\n";
    }
    return s;
}

Matrix Matrix::from_text(const Field& f, std::string_view text) {
    const std::vector<Token> toks = tokenize_ints(text);
    if (toks.size() < 2) throw ParseError("missing \"rows cols\" header", 1, 1);
    const std::int64_t rows = toks[0].value, cols = toks[1].value;
    if (rows < 1 || cols < 1)
        throw ParseError("matrix dimensions must be >= 1", toks[0].line, toks[0].column);
    if (rows > kMaxEntries / cols)
        throw ParseError("matrix too large", toks[0].line, toks[0].column);
    if (static_cast<std::int64_t>(toks.size()) - 2 != rows * cols) {
        const Token& ref = toks.size() > 2 ? toks.back() : toks[1];
        throw ParseError("expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(toks.size() - 2),
                         ref.line, ref.column);
    }
    Matrix m(f, rows, cols);
    for (std::int64_t k = 0; k < rows * cols; ++k) {
        const Token& t = toks[k + 2];
        if (t.value < 0 || t.value >= f.order())
            throw ParseError("entry " + std::to_string(t.value) + " out of range for " +
                                 f.describe(),
                             t.line, t.column);
        m.set_index(k / cols, k % cols, t.value);
    }
    return m;
}

}  // namespace gfo
