#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gfo/construct.hpp"
#include "gfo/matrix.hpp"

namespace gfo {

/// The transmitted key parameters. r is an element index and must be
/// nonzero; poly is required exactly when alpha > 1.
struct CipherKey {
    std::int64_t p = 0;
    std::int64_t alpha = 1;
    std::int64_t t = 1;
    std::int64_t r = 1;
    std::vector<std::int64_t> poly;

    friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Derived key material: the field, the key matrix W = A + rI, its verified
/// weight r^2, and the decryption factor l = (r^2)^-1 so that W^-1 = l W^T.
class KeyMaterial {
public:
    const CipherKey& key() const { return key_; }
    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    const Matrix& matrix() const { return w_; }
    Elem scale() const { return field_->elem(key_.r); }
    Elem weight() const { return field_->elem(weight_); }
    Elem decrypt_factor() const { return field_->elem(l_); }

private:
    friend KeyMaterial form_key(const CipherKey& key);
    KeyMaterial(CipherKey key, std::shared_ptr<const Field> field, Matrix w, std::int64_t weight,
                std::int64_t l)
        : key_(std::move(key)), field_(std::move(field)), w_(std::move(w)), weight_(weight), l_(l) {}

    CipherKey key_;
    std::shared_ptr<const Field> field_;
    Matrix w_;
    std::int64_t weight_;
    std::int64_t l_;
};

/// Validates the key, builds W = A + rI, confirms the Gram matrix is r^2 I,
/// and computes l = (r^2)^-1.
KeyMaterial form_key(const CipherKey& key);

/// Block padding symbol: 32 (space) when it fits the field, else 0.
std::int64_t pad_code(const Field& f);

/// Maps bytes to element indices and splits them into column blocks of
/// length q, right-padding the final block. Empty input yields one all-pad
/// block. Throws SymbolOutOfRange when a byte does not fit the field.
std::vector<std::vector<Elem>> encode_message(std::string_view bytes, const Field& f);

/// C = W * M.
std::vector<Elem> encrypt(const KeyMaterial& km, const std::vector<Elem>& m);

/// M = l * W^T * C; exact inverse of encrypt.
std::vector<Elem> decrypt(const KeyMaterial& km, const std::vector<Elem>& c);

/// Joins blocks back into bytes, stripping trailing pad symbols of the final
/// block. Pad symbols in the interior are preserved.
std::string decode_message(const std::vector<std::vector<Elem>>& blocks);

/// Display form: printable ASCII codes (32..126) render as their character,
/// anything else as "(n)*".
std::string render_printable(const std::vector<Elem>& block);

/// "p=<p> alpha=<alpha> t=<t> r=<r>" plus " poly=c0,c1,..." when alpha > 1.
std::string serialize_key(const CipherKey& key);
CipherKey parse_key(std::string_view text);

/// One line per block, each line q space-separated element indices.
std::string serialize_cipher(const std::vector<std::vector<Elem>>& blocks);
std::vector<std::vector<Elem>> parse_cipher(const Field& f, std::string_view text);

}  // namespace gfo
