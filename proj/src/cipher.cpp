#include "gfo/cipher.hpp"

#include <cctype>
#include <charconv>

namespace gfo {

KeyMaterial form_key(const CipherKey& key) {
    auto field = std::make_shared<const Field>(key.p, key.alpha, key.poly);
    if (key.r <= 0 || key.r >= field->order()) {
        if (key.r == 0) throw ZeroScale();
        throw InvalidArgument("scale index " + std::to_string(key.r) + " out of range for " +
                              field->describe());
    }
    const Elem r = field->elem(key.r);
    Matrix w = weighted_orthogonal(*field, key.t, r);
    const Elem expected_weight = r * r;
    const std::optional<Elem> verified = weight_of(w);
    if (!verified || *verified != expected_weight)
        throw Error("internal: key matrix failed its weight check");
    const Elem l = expected_weight.inverse();
    return KeyMaterial(key, std::move(field), std::move(w), expected_weight.index(), l.index());
}

std::int64_t pad_code(const Field& f) { return 32 < f.order() ? 32 : 0; }

std::vector<std::vector<Elem>> encode_message(std::string_view bytes, const Field& f) {
    const std::int64_t q = f.order();
    const std::int64_t pad = pad_code(f);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        const auto b = static_cast<unsigned char>(bytes[i]);
        if (static_cast<std::int64_t>(b) >= q) throw SymbolOutOfRange(b, i, q);
    }
    const std::size_t nblocks = bytes.empty() ? 1 : (bytes.size() + q - 1) / q;
    std::vector<std::vector<Elem>> blocks;
    blocks.reserve(nblocks);
    for (std::size_t blk = 0; blk < nblocks; ++blk) {
        std::vector<Elem> v;
        v.reserve(q);
        for (std::int64_t j = 0; j < q; ++j) {
            const std::size_t pos = blk * q + j;
            v.push_back(pos < bytes.size()
                            ? f.elem(static_cast<unsigned char>(bytes[pos]))
                            : f.elem(pad));
        }
        blocks.push_back(std::move(v));
    }
    return blocks;
}

namespace {
void require_block(const KeyMaterial& km, const std::vector<Elem>& v) {
    if (static_cast<std::int64_t>(v.size()) != km.field().order())
        throw DimMismatch("block length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(km.field().order()));
    for (const Elem& x : v)
        if (!x.field().same_as(km.field())) throw FieldMismatch();
}
}  // namespace

std::vector<Elem> encrypt(const KeyMaterial& km, const std::vector<Elem>& m) {
    require_block(km, m);
    return km.matrix() * m;
}

std::vector<Elem> decrypt(const KeyMaterial& km, const std::vector<Elem>& c) {
    require_block(km, c);
    const Field& f = km.field();
    const Matrix& w = km.matrix();
    const std::int64_t q = f.order();
    const std::int64_t l = km.decrypt_factor().index();
    std::vector<Elem> out;
    out.reserve(q);
    for (std::int64_t i = 0; i < q; ++i) {
        std::int64_t acc = 0;
        for (std::int64_t j = 0; j < q; ++j)
            acc = f.add_idx(acc, f.mul_idx(w.index_at(j, i), c[j].index()));
        out.push_back(f.elem(f.mul_idx(l, acc)));
    }
    return out;
}

std::string decode_message(const std::vector<std::vector<Elem>>& blocks) {
    std::string bytes;
    for (const auto& blk : blocks)
        for (const Elem& e : blk) {
            if (e.index() > 255)
                throw InvalidArgument("symbol code " + std::to_string(e.index()) +
                                      " does not fit a byte");
            bytes.push_back(static_cast<char>(static_cast<unsigned char>(e.index())));
        }
    if (blocks.empty()) return bytes;
    const std::int64_t pad = pad_code(blocks.back().front().field());
    const std::size_t final_len = blocks.back().size();
    std::size_t strip = 0;
    while (strip < final_len && !bytes.empty() &&
           static_cast<unsigned char>(bytes.back()) == pad) {
        bytes.pop_back();
        ++strip;
    }
    return bytes;
}

std::string render_printable(const std::vector<Elem>& block) {
    std::string out;
    for (const Elem& e : block) {
        const std::int64_t c = e.index();
        if (c >= 32 && c <= 126)
            out.push_back(static_cast<char>(c));
        else
            out += "(" + std::to_string(c) + ")*";
    }
    return out;
}

std::string serialize_key(const CipherKey& key) {
    std::string s = "p=" + std::to_string(key.p) + " alpha=" + std::to_string(key.alpha) +
                    " t=" + std::to_string(key.t) + " r=" + std::to_string(key.r);
    if (key.alpha > 1) {
        s += " poly=";
        for (std::size_t i = 0; i < key.poly.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(key.poly[i]);
        }
    }
    return s;
}

namespace {

std::int64_t parse_int(std::string_view s, std::int64_t line, std::int64_t col) {
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("expected an integer, got \"" + std::string(s) + "\"", line, col);
    return v;
}

}  // namespace

CipherKey parse_key(std::string_view text) {
    CipherKey key;
    bool seen[5] = {false, false, false, false, false};  // p alpha t r poly
    std::int64_t col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            // key files are single-line; anything after a newline is junk
            std::size_t rest = text.find_first_not_of(" \t\r\n", i);
            if (rest != std::string_view::npos)
                throw ParseError("key must be a single line", 2, 1);
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col, ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        const std::string_view tok = text.substr(i, j - i);
        const std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected name=value, got \"" + std::string(tok) + "\"", 1, col);
        const std::string_view name = tok.substr(0, eq);
        const std::string_view value = tok.substr(eq + 1);
        const std::int64_t value_col = col + static_cast<std::int64_t>(eq) + 1;
        if (name == "p" || name == "alpha" || name == "t" || name == "r") {
            const int slot = name == "p" ? 0 : name == "alpha" ? 1 : name == "t" ? 2 : 3;
            if (seen[slot])
                throw ParseError("duplicate field \"" + std::string(name) + "\"", 1, col);
            seen[slot] = true;
            const std::int64_t v = parse_int(value, 1, value_col);
            (slot == 0 ? key.p : slot == 1 ? key.alpha : slot == 2 ? key.t : key.r) = v;
        } else if (name == "poly") {
            if (seen[4]) throw ParseError("duplicate field \"poly\"", 1, col);
            seen[4] = true;
            std::int64_t at = value_col;
            std::size_t start = 0;
            if (value.empty()) throw ParseError("empty poly list", 1, value_col);
            while (true) {
                const std::size_t comma = value.find(',', start);
                const std::string_view part =
                    value.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - start);
                key.poly.push_back(parse_int(part, 1, at));
                if (comma == std::string_view::npos) break;
                at += static_cast<std::int64_t>(part.size()) + 1;
                start = comma + 1;
            }
        } else {
            throw ParseError("unknown field \"" + std::string(name) + "\"", 1, col);
        }
        col += static_cast<std::int64_t>(tok.size());
        i = j;
    }
    if (!seen[0]) throw ParseError("missing field \"p\"", 1, col);
    if (!seen[1]) throw ParseError("missing field \"alpha\"", 1, col);
    if (!seen[2]) throw ParseError("missing field \"t\"", 1, col);
    if (!seen[3]) throw ParseError("missing field \"r\"", 1, col);
    if (key.alpha > 1 && !seen[4]) throw ParseError("missing field \"poly\"", 1, col);
    if (key.alpha == 1 && seen[4])
        throw ParseError("poly given for a prime field (alpha=1)", 1, col);
    return key;
}

std::string serialize_cipher(const std::vector<std::vector<Elem>>& blocks) {
    std::string s;
    for (const auto& blk : blocks) {
        for (std::size_t j = 0; j < blk.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(blk[j].index());
        }
        s += "\n";
    }
    return s;
}

std::vector<std::vector<Elem>> parse_cipher(const Field& f, std::string_view text) {
    std::vector<std::vector<Elem>> blocks;
    std::int64_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++line_no;
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            if (end == std::string_view::npos) break;
            continue;
        }
        std::vector<Elem> blk;
        blk.reserve(f.order());
        std::int64_t col = 1;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++col, ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            const std::string_view tok = line.substr(i, j - i);
            const std::int64_t v = parse_int(tok, line_no, col);
            if (v < 0 || v >= f.order())
                throw ParseError("element index " + std::to_string(v) + " out of range for " +
                                     f.describe(),
                                 line_no, col);
            blk.push_back(f.elem(v));
            col += static_cast<std::int64_t>(tok.size());
            i = j;
        }
        if (static_cast<std::int64_t>(blk.size()) != f.order())
            throw ParseError("block has " + std::to_string(blk.size()) + " entries, expected " +
                                 std::to_string(f.order()),
                             line_no, 1);
        blocks.push_back(std::move(blk));
        if (end == std::string_view::npos) break;
    }
    if (blocks.empty()) throw ParseError("cipher text contains no blocks", 1, 1);
    return blocks;
}

}  // namespace gfo
