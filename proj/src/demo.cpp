#include "gfo/demo.hpp"

namespace gfo {

CipherKey demo_key() { return CipherKey{89, 1, 2, 5, {}}; }

std::string demo_plaintext() { return "COVID-19"; }

const std::array<std::int64_t, 89>& demo_reference_cipher() {
    static const std::array<std::int64_t, 89> table = {
        56, 26, 58, 77, 45, 10, 19, 46, 84, 67, 48, 27, 4,  68, 41, 12, 70, 37,
        2,  54, 15, 63, 20, 64, 17, 57, 6,  42, 76, 19, 49, 77, 14, 38, 60, 80,
        9,  25, 39, 51, 61, 69, 75, 79, 81, 81, 79, 75, 69, 61, 51, 39, 25, 9,
        80, 60, 38, 14, 77, 49, 19, 76, 42, 6,  57, 17, 64, 20, 63, 15, 54, 2,
        37, 70, 12, 41, 68, 4,  27, 48, 67, 84, 10, 23, 34, 43, 50, 55, 58};
    return table;
}

DemoResult run_demo() {
    DemoResult result;
    result.key = demo_key();
    const KeyMaterial km = form_key(result.key);
    const Field& f = km.field();
    result.l = km.decrypt_factor().index();
    result.weight = km.weight().index();

    const auto blocks = encode_message(demo_plaintext(), f);
    const std::vector<Elem>& m = blocks.front();
    for (const Elem& e : m) result.message_codes.push_back(e.index());

    const std::vector<Elem> c = encrypt(km, m);
    for (const Elem& e : c) result.cipher_codes.push_back(e.index());
    result.rendered_cipher = render_printable(c);

    const auto& reference = demo_reference_cipher();
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (result.cipher_codes[i] != reference[i])
            result.mismatches.push_back({i, result.cipher_codes[i], reference[i]});
    }

    const std::vector<Elem> d = decrypt(km, c);
    for (const Elem& e : d) result.decrypted_codes.push_back(e.index());
    result.recovered_text = decode_message({d});
    result.round_trip_ok =
        result.decrypted_codes == result.message_codes && result.recovered_text == demo_plaintext();
    return result;
}

namespace {
std::string join_codes(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}
}  // namespace

std::string format_demo(const DemoResult& r) {
    std::string s;
    s += "key: " + serialize_key(r.key) + "\n";
    s += "derived: l=" + std::to_string(r.l) + " weight=" + std::to_string(r.weight) + "\n";
    s += "message codes: " + join_codes(r.message_codes) + "\n";
    s += "cipher codes: " + join_codes(r.cipher_codes) + "\n";
    s += "cipher rendered: " + r.rendered_cipher + "\n";
    if (r.mismatches.empty()) {
        s += "reference check: all " + std::to_string(r.cipher_codes.size()) +
             " entries match\n";
    } else {
        s += "reference check: " + std::to_string(r.mismatches.size()) +
             " entries differ\n";
        s += "  index computed reference\n";
        for (const DemoMismatch& m : r.mismatches) {
            s += "  " + std::to_string(m.index) + " " + std::to_string(m.computed) + " " +
                 std::to_string(m.reference) + "\n";
        }
    }
    s += "decrypted codes: " + join_codes(r.decrypted_codes) + "\n";
    s += "recovered: " + r.recovered_text + "\n";
    s += std::string("round trip: ") + (r.round_trip_ok ? "ok" : "BROKEN") + "\n";
    return s;
}

}  // namespace gfo
