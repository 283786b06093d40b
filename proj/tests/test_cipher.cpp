#include <doctest.h>

#include "gfo/cipher.hpp"
#include "gfo/demo.hpp"
#include "support.hpp"

using gfo::CipherKey;
using gfo::Field;
using namespace testsupport;

namespace {
std::vector<std::int64_t> indices(const std::vector<gfo::Elem>& v) {
    std::vector<std::int64_t> out;
    for (const auto& e : v) out.push_back(e.index());
    return out;
}
}  // namespace

TEST_CASE("form_key derives W and l") {
    const gfo::KeyMaterial km = gfo::form_key(CipherKey{89, 1, 2, 5, {}});
    CHECK(km.decrypt_factor().index() == 57);
    CHECK(km.weight().index() == 25);
    CHECK(km.matrix().rows() == 89);

    const gfo::KeyMaterial km5 = gfo::form_key(CipherKey{5, 1, 1, 1, {}});
    CHECK(km5.decrypt_factor().index() == 1);  // r=1 gives l=1

    CHECK_THROWS_AS((void)gfo::form_key(CipherKey{5, 1, 2, 1, {}}), gfo::BadExponent);
    CHECK_THROWS_AS((void)gfo::form_key(CipherKey{5, 1, 1, 0, {}}), gfo::ZeroScale);
    CHECK_THROWS_AS((void)gfo::form_key(CipherKey{6, 1, 1, 1, {}}), gfo::NotPrime);
    CHECK_THROWS_AS((void)gfo::form_key(CipherKey{5, 1, 1, 7, {}}), gfo::InvalidArgument);
}

TEST_CASE("l times r^2 is one, and lW^T is a left inverse") {
    std::vector<CipherKey> keys = {
        {5, 1, 1, 3, {}}, {7, 1, 2, 6, {}}, {13, 1, 4, 11, {}}, {89, 1, 2, 5, {}},
        {3, 2, 1, 5, {2, 1, 1}},  // GF(9)
    };
    for (const auto& key : keys) {
        const gfo::KeyMaterial km = gfo::form_key(key);
        const Field& f = km.field();
        CHECK(km.decrypt_factor() * km.scale() * km.scale() == f.one());
        const gfo::Matrix lhs =
            gfo::scalar_mul(km.decrypt_factor(), gfo::transpose(km.matrix())) * km.matrix();
        CHECK(lhs == gfo::identity(f, f.order()));
    }
}

TEST_CASE("encode_message blocks and pads") {
    const Field z89(89);
    const auto blocks = gfo::encode_message("COVID-19", z89);
    REQUIRE(blocks.size() == 1);
    const auto codes = indices(blocks[0]);
    const std::vector<std::int64_t> head{67, 79, 86, 73, 68, 45, 49, 57};
    CHECK(std::vector<std::int64_t>(codes.begin(), codes.begin() + 8) == head);
    for (std::size_t i = 8; i < 89; ++i) CHECK(codes[i] == 32);

    // pad symbol falls back to 0 where 32 does not fit
    const Field z5(5);
    const auto small = gfo::encode_message("", z5);
    REQUIRE(small.size() == 1);
    CHECK(indices(small[0]) == std::vector<std::int64_t>{0, 0, 0, 0, 0});

    const std::string long_msg(90, 'A');
    const auto two = gfo::encode_message(long_msg, z89);
    REQUIRE(two.size() == 2);
    CHECK(two[1][0].index() == 65);
    for (std::size_t i = 1; i < 89; ++i) CHECK(two[1][i].index() == 32);

    CHECK_THROWS_AS((void)gfo::encode_message("lowercase", z89), gfo::SymbolOutOfRange);
    try {
        (void)gfo::encode_message("corona", z89);
        FAIL("expected SymbolOutOfRange");
    } catch (const gfo::SymbolOutOfRange& e) {
        const std::string msg = e.what();
        CHECK(msg.find("99") != std::string::npos);   // 'c'
        CHECK(msg.find("257") != std::string::npos);  // suggested order
    }
}

TEST_CASE("encrypt matches hand-computed vectors") {
    const gfo::KeyMaterial km = gfo::form_key(CipherKey{5, 1, 1, 1, {}});
    const Field& f = km.field();
    const std::vector<gfo::Elem> m{f.elem(1), f.elem(2), f.elem(3), f.elem(0), f.elem(0)};
    CHECK(indices(gfo::encrypt(km, m)) == std::vector<std::int64_t>{4, 4, 4, 0, 4});
    CHECK(indices(gfo::decrypt(km, gfo::encrypt(km, m))) ==
          std::vector<std::int64_t>{1, 2, 3, 0, 0});

    const std::vector<gfo::Elem> zero(5, f.zero());
    CHECK(indices(gfo::encrypt(km, zero)) == std::vector<std::int64_t>(5, 0));

    CHECK_THROWS_AS((void)gfo::encrypt(km, std::vector<gfo::Elem>{f.zero()}), gfo::DimMismatch);
    const Field z7(7);
    CHECK_THROWS_AS((void)gfo::encrypt(km, std::vector<gfo::Elem>(5, z7.zero())),
                    gfo::FieldMismatch);
}

TEST_CASE("the worked example reproduces its reference ciphertext") {
    const gfo::KeyMaterial km = gfo::form_key(CipherKey{89, 1, 2, 5, {}});
    const auto blocks = gfo::encode_message("COVID-19", km.field());
    const auto c = gfo::encrypt(km, blocks[0]);
    const auto& expected = gfo::demo_reference_cipher();
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(c[i].index() == expected[i]);

    const auto back = gfo::decrypt(km, c);
    CHECK(gfo::decode_message({back}) == "COVID-19");
}

TEST_CASE("encryption is linear") {
    std::mt19937_64 rng(11);
    const gfo::KeyMaterial km = gfo::form_key(CipherKey{13, 1, 3, 7, {}});
    const Field& f = km.field();
    std::uniform_int_distribution<std::int64_t> dist(0, 12);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<gfo::Elem> m1, m2, sum;
        for (int i = 0; i < 13; ++i) {
            m1.push_back(f.elem(dist(rng)));
            m2.push_back(f.elem(dist(rng)));
            sum.push_back(m1.back() + m2.back());
        }
        const auto c1 = gfo::encrypt(km, m1), c2 = gfo::encrypt(km, m2),
                   cs = gfo::encrypt(km, sum);
        for (int i = 0; i < 13; ++i) CHECK(cs[i] == c1[i] + c2[i]);
    }
}

TEST_CASE("round trips over assorted keys and messages") {
    std::mt19937_64 rng(12);
    const std::vector<CipherKey> keys = {
        {5, 1, 1, 2, {}}, {7, 1, 1, 3, {}}, {11, 1, 4, 10, {}},
        {13, 1, 5, 6, {}}, {89, 1, 30, 88, {}}, {257, 1, 100, 256, {}},
    };
    for (const auto& key : keys) {
        const gfo::KeyMaterial km = gfo::form_key(key);
        const Field& f = km.field();
        const std::int64_t pad = gfo::pad_code(f);
        std::uniform_int_distribution<std::int64_t> len_dist(0, 3 * f.order());
        std::uniform_int_distribution<std::int64_t> byte_dist(0, f.order() - 1);
        for (int trial = 0; trial < 8; ++trial) {
            std::string msg(static_cast<std::size_t>(len_dist(rng)), '\0');
            for (auto& ch : msg) ch = static_cast<char>(byte_dist(rng));
            // a trailing pad byte is indistinguishable from padding by design
            if (!msg.empty() && static_cast<unsigned char>(msg.back()) == pad) msg.back() = 1;
            const auto blocks = gfo::encode_message(msg, f);
            std::vector<std::vector<gfo::Elem>> decrypted;
            for (const auto& b : blocks) decrypted.push_back(gfo::decrypt(km, gfo::encrypt(km, b)));
            CHECK(gfo::decode_message(decrypted) == msg);
        }
    }
}

TEST_CASE("decode keeps interior pads and strips trailing ones") {
    const Field z89(89);
    const auto blocks = gfo::encode_message("AB CD", z89);
    CHECK(gfo::decode_message(blocks) == "AB CD");

    const std::string msg90(90, 'Q');
    CHECK(gfo::decode_message(gfo::encode_message(msg90, z89)) == msg90);
}

TEST_CASE("render_printable") {
    const Field z89(89);
    CHECK(gfo::render_printable({z89.elem(56), z89.elem(26), z89.elem(58)}) == "8(26)*:");
    CHECK(gfo::render_printable({z89.elem(65)}) == "A");
    const Field z257(257);
    CHECK(gfo::render_printable({z257.elem(127)}) == "(127)*");
}

TEST_CASE("key serialization") {
    const CipherKey key{89, 1, 2, 5, {}};
    CHECK(gfo::serialize_key(key) == "p=89 alpha=1 t=2 r=5");
    CHECK(gfo::parse_key("p=89 alpha=1 t=2 r=5") == key);
    CHECK(gfo::parse_key("p=89 alpha=1 t=2 r=5\n") == key);

    const CipherKey gf4{2, 2, 1, 2, {1, 1, 1}};
    CHECK(gfo::serialize_key(gf4) == "p=2 alpha=2 t=1 r=2 poly=1,1,1");
    CHECK(gfo::parse_key(gfo::serialize_key(gf4)) == gf4);

    CHECK_THROWS_AS((void)gfo::parse_key("p=89 t=2 r=5"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_key("p=89 alpha=1 t=2 r=5 poly=1,1"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_key("p=89 alpha=1 t=2 r=x"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_key("p=89 p=89 alpha=1 t=2 r=5"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_key("p=89 alpha=1 t=2 r=5 junk=1"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_key("p=89 alpha=1 t=2 r=5\nr=6"), gfo::ParseError);
}

TEST_CASE("cipher serialization") {
    const Field z5(5);
    const gfo::KeyMaterial km = gfo::form_key(CipherKey{5, 1, 1, 2, {}});
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> dist(0, 4);
    std::vector<std::vector<gfo::Elem>> blocks;
    for (int b = 0; b < 3; ++b) {
        std::vector<gfo::Elem> blk;
        for (int i = 0; i < 5; ++i) blk.push_back(z5.elem(dist(rng)));
        blocks.push_back(blk);
    }
    const std::string text = gfo::serialize_cipher(blocks);
    const auto parsed = gfo::parse_cipher(z5, text);
    REQUIRE(parsed.size() == blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        CHECK(indices(parsed[b]) == indices(blocks[b]));

    CHECK_THROWS_AS((void)gfo::parse_cipher(z5, "0 1 2 3\n"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_cipher(z5, "0 1 2 3 9\n"), gfo::ParseError);
    CHECK_THROWS_AS((void)gfo::parse_cipher(z5, ""), gfo::ParseError);
    try {
        (void)gfo::parse_cipher(z5, "0 1 2 3 4\n0 1 7 3 4\n");
        FAIL("expected ParseError");
    } catch (const gfo::ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("extension-field cipher works end to end") {
    // symbols are element indices; W M and l are full field operations
    const gfo::KeyMaterial km = gfo::form_key(CipherKey{3, 2, 1, 5, {2, 1, 1}});
    const Field& f = km.field();
    const std::string msg = "\x01\x02\x03\x04\x05\x06\x07\x08";
    const auto blocks = gfo::encode_message(msg, f);
    REQUIRE(blocks.size() == 1);
    const auto c = gfo::encrypt(km, blocks[0]);
    CHECK(gfo::decode_message({gfo::decrypt(km, c)}) == msg);
}

TEST_CASE("demo pipeline matches its frozen transcript") {
    const gfo::DemoResult r = gfo::run_demo();
    CHECK(r.l == 57);
    CHECK(r.weight == 25);
    CHECK(r.mismatches.empty());
    CHECK(r.round_trip_ok);
    CHECK(r.recovered_text == "COVID-19");
    CHECK(r.cipher_codes[0] == 56);
    CHECK(r.rendered_cipher.substr(0, 7) == "8(26)*:");

    const std::string out = gfo::format_demo(r);
    CHECK(out.find("l=57") != std::string::npos);
    CHECK(out.find("all 89 entries match") != std::string::npos);

    // discrepancy table appears whenever computed and reference disagree
    gfo::DemoResult doctored = r;
    doctored.mismatches.push_back({3, doctored.cipher_codes[3], 0});
    const std::string table = gfo::format_demo(doctored);
    CHECK(table.find("entries differ") != std::string::npos);
    CHECK(table.find("index computed reference") != std::string::npos);
}
