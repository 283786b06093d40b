#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gfo/cipher.hpp"

namespace gfo {

/// Parameters of the built-in worked example: GF(89), t=2, r=5.
CipherKey demo_key();

/// The example plaintext, "COVID-19".
std::string demo_plaintext();

/// Known-good ciphertext for the demo key and plaintext; the demo compares
/// its freshly computed vector entrywise against this table.
const std::array<std::int64_t, 89>& demo_reference_cipher();

struct DemoMismatch {
    std::size_t index;
    std::int64_t computed;
    std::int64_t reference;
};

struct DemoResult {
    CipherKey key;
    std::int64_t l = 0;
    std::int64_t weight = 0;
    std::vector<std::int64_t> message_codes;
    std::vector<std::int64_t> cipher_codes;
    std::string rendered_cipher;
    std::vector<DemoMismatch> mismatches;  // empty when computed == reference
    std::vector<std::int64_t> decrypted_codes;
    std::string recovered_text;
    bool round_trip_ok = false;
};

/// Runs the full pipeline: key formation, encoding, encryption, reference
/// comparison, decryption, decoding.
DemoResult run_demo();

/// Human-readable transcript, including a discrepancy table when the
/// computed cipher disagrees with the reference anywhere.
std::string format_demo(const DemoResult& result);

}  // namespace gfo
