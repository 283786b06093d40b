// Command-line front end: key generation, encryption, decryption, matrix
// construction and inspection, field verification sweeps, and the built-in
// worked example.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gfo/analysis.hpp"
#include "gfo/cipher.hpp"
#include "gfo/construct.hpp"
#include "gfo/demo.hpp"

namespace {

std::vector<std::int64_t> parse_poly_list(const std::string& s) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw gfo::InvalidArgument("bad polynomial coefficient \"" + part + "\"");
        }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gfo::Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gfo::Error("cannot write " + path.string());
    out << content;
}

struct FieldOpts {
    std::int64_t prime = 0;
    std::int64_t alpha = 1;
    std::string poly;

    void attach(CLI::App* cmd) {
        cmd->add_option("--prime", prime, "field characteristic p")->required();
        cmd->add_option("--alpha", alpha, "extension degree (default 1)");
        cmd->add_option("--poly", poly,
                        "modulus polynomial coefficients c0,c1,... (required when alpha > 1)");
    }

    gfo::Field make() const { return gfo::Field(prime, alpha, parse_poly_list(poly)); }
};

// Sweep entries are comma separated; an entry "q" may carry ":poly=c0,c1,..."
// whose poly consumes exactly alpha+1 of the following comma-split tokens.
struct SweepEntry {
    std::int64_t q = 0;
    std::string poly;
    std::string raw;
};

std::pair<std::int64_t, std::int64_t> factor_prime_power(std::int64_t q) {
    if (q < 2) throw gfo::InvalidArgument("field order must be >= 2: " + std::to_string(q));
    std::int64_t p = q;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::int64_t alpha = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++alpha;
    }
    if (rest != 1)
        throw gfo::InvalidArgument("not a prime power: " + std::to_string(q));
    return {p, alpha};
}

std::vector<SweepEntry> parse_sweep(const std::string& spec) {
    std::vector<std::string> tokens;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) tokens.push_back(part);
    std::vector<SweepEntry> entries;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        SweepEntry e;
        std::string head = tokens[i];
        const std::size_t colon = head.find(':');
        std::string first_coeff;
        if (colon != std::string::npos) {
            const std::string tail = head.substr(colon + 1);
            head = head.substr(0, colon);
            if (tail.rfind("poly=", 0) != 0)
                throw gfo::InvalidArgument("bad sweep entry \"" + tokens[i] +
                                           "\": expected q or q:poly=c0,c1,...");
            first_coeff = tail.substr(5);
        }
        try {
            std::size_t used = 0;
            e.q = std::stoll(head, &used);
            if (used != head.size()) throw std::invalid_argument(head);
        } catch (const std::exception&) {
            throw gfo::InvalidArgument("bad field order \"" + head + "\" in sweep");
        }
        e.raw = head;
        if (!first_coeff.empty()) {
            const auto [p, alpha] = factor_prime_power(e.q);
            (void)p;
            std::string poly = first_coeff;
            for (std::int64_t need = 1; need <= alpha; ++need) {
                if (++i >= tokens.size())
                    throw gfo::InvalidArgument("sweep entry for q=" + std::to_string(e.q) +
                                               " needs " + std::to_string(alpha + 1) +
                                               " polynomial coefficients");
                poly += "," + tokens[i];
            }
            e.poly = poly;
            e.raw += ":poly=" + poly;
        }
        entries.push_back(e);
    }
    return entries;
}

int cmd_keygen(const FieldOpts& fo, std::int64_t t, std::int64_t r, const std::string& out) {
    gfo::CipherKey key{fo.prime, fo.alpha, t, r, parse_poly_list(fo.poly)};
    const gfo::KeyMaterial km = gfo::form_key(key);
    write_file(out, gfo::serialize_key(key) + "\n");
    std::cout << "l=" << km.decrypt_factor().index() << " weight=" << km.weight().index() << "\n";
    return 0;
}

int cmd_encrypt(const std::string& keyfile, const std::string& in, const std::string& out,
                bool pretty) {
    const gfo::CipherKey key = gfo::parse_key(read_file(keyfile));
    const gfo::KeyMaterial km = gfo::form_key(key);
    const auto blocks = gfo::encode_message(read_file(in), km.field());
    std::vector<std::vector<gfo::Elem>> cipher;
    cipher.reserve(blocks.size());
    for (const auto& b : blocks) cipher.push_back(gfo::encrypt(km, b));
    write_file(out, gfo::serialize_cipher(cipher));
    if (pretty) {
        for (const auto& c : cipher) std::cout << gfo::render_printable(c) << "\n";
    }
    return 0;
}

int cmd_decrypt(const std::string& keyfile, const std::string& in, const std::string& out) {
    const gfo::CipherKey key = gfo::parse_key(read_file(keyfile));
    const gfo::KeyMaterial km = gfo::form_key(key);
    const auto cipher = gfo::parse_cipher(km.field(), read_file(in));
    std::vector<std::vector<gfo::Elem>> plain;
    plain.reserve(cipher.size());
    for (const auto& c : cipher) plain.push_back(gfo::decrypt(km, c));
    write_file(out, gfo::decode_message(plain));
    return 0;
}

int cmd_construct(const FieldOpts& fo, const std::string& kind, std::int64_t t, std::int64_t t2,
                  std::int64_t r, std::int64_t k, std::int64_t order, const std::string& hadamard,
                  const std::string& out) {
    const gfo::Field f = fo.make();
    std::optional<gfo::Matrix> m;
    if (kind == "self") {
        m = gfo::self_orthogonal(f, t);
    } else if (kind == "weighted") {
        m = gfo::weighted_orthogonal(f, t, f.elem(r));
    } else if (kind == "anti") {
        m = gfo::anti_orthogonal(f, t);
    } else if (kind == "block2q") {
        m = gfo::block_2q(f, t, t2, f.elem(k));
    } else if (kind == "kron") {
        const gfo::Matrix h = hadamard.empty() ? gfo::hadamard_sylvester(f, order)
                                               : gfo::load_hadamard(f, hadamard);
        m = gfo::kron_weighted(h, gfo::weighted_orthogonal(f, t, f.elem(r)));
    } else {
        throw gfo::InvalidArgument("unknown construction kind \"" + kind + "\"");
    }
    write_file(out, m->to_text());
    const std::optional<gfo::Elem> w = gfo::weight_of(*m);
    std::cout << "order=" << m->rows() << " weight="
              << (w ? std::to_string(w->index()) : std::string("none")) << "\n";
    return 0;
}

int cmd_verify(const std::string& fields) {
    bool ok = true;
    std::string machine;
    for (const SweepEntry& e : parse_sweep(fields)) {
        try {
            const auto [p, alpha] = factor_prime_power(e.q);
            const gfo::Field f(p, alpha, parse_poly_list(e.poly));
            const gfo::VerificationReport report = gfo::verify_field(f);
            std::cout << report.text();
            if (f.order() >= 4)
                std::cout << "  keyspace: " << gfo::keyspace_figures(f.order()).text() << "\n";
            machine += report.machine_text();
            ok = ok && report.all_passed();
        } catch (const std::exception& ex) {
            std::cout << e.raw << "\n  [error] " << ex.what() << "\n";
            ok = false;
        }
    }
    std::cout << machine;
    return ok ? 0 : 1;
}

int cmd_demo() {
    const gfo::DemoResult r = gfo::run_demo();
    std::cout << gfo::format_demo(r);
    return r.round_trip_ok ? 0 : 1;
}

int cmd_inspect(const FieldOpts& fo, const std::string& in) {
    const gfo::Field f = fo.make();
    const gfo::Matrix m = gfo::Matrix::from_text(f, read_file(in));
    std::cout << m.to_text();
    if (m.rows() == m.cols()) {
        const std::optional<gfo::Elem> w = gfo::weight_of(m);
        std::cout << "weight=" << (w ? std::to_string(w->index()) : std::string("none")) << "\n";
    } else {
        std::cout << "weight=none (not square)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted orthogonal matrices over GF(p^alpha) and the matrix cipher built on them"};
    app.require_subcommand(1);

    // keygen
    auto* keygen = app.add_subcommand("keygen", "derive and store a cipher key");
    FieldOpts kg_field;
    kg_field.attach(keygen);
    std::int64_t kg_t = 1, kg_r = 1;
    std::string kg_out;
    keygen->add_option("--exp", kg_t, "construction exponent t")->required();
    keygen->add_option("--scale", kg_r, "diagonal scale r (element index, nonzero)")->required();
    keygen->add_option("--out", kg_out, "key file to write")->required();

    // encrypt / decrypt
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file block by block");
    std::string enc_key, enc_in, enc_out;
    bool enc_pretty = false;
    encrypt->add_option("--key", enc_key, "key file")->required();
    encrypt->add_option("--in", enc_in, "plaintext file")->required();
    encrypt->add_option("--out", enc_out, "cipher file to write")->required();
    encrypt->add_flag("--pretty", enc_pretty, "also print a printable rendering");

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a cipher file");
    std::string dec_key, dec_in, dec_out;
    decrypt->add_option("--key", dec_key, "key file")->required();
    decrypt->add_option("--in", dec_in, "cipher file")->required();
    decrypt->add_option("--out", dec_out, "plaintext file to write")->required();

    // construct
    auto* construct = app.add_subcommand("construct", "build a matrix and write it as text");
    FieldOpts ct_field;
    ct_field.attach(construct);
    std::string ct_kind, ct_hadamard, ct_out;
    std::int64_t ct_t = 1, ct_t2 = 1, ct_r = 1, ct_k = 0, ct_order = 4;
    construct->add_option("--kind", ct_kind, "one of: self, weighted, anti, block2q, kron")
        ->required();
    construct->add_option("--exp", ct_t, "construction exponent t (default 1)");
    construct->add_option("--exp2", ct_t2, "second exponent for block2q (default 1)");
    construct->add_option("--scale", ct_r, "scale r for weighted/kron (default 1)");
    construct->add_option("--weight", ct_k, "target weight k for block2q (default 0)");
    construct->add_option("--order", ct_order, "Sylvester Hadamard order for kron (default 4)");
    construct->add_option("--hadamard", ct_hadamard, "Hadamard fixture file for kron");
    construct->add_option("--out", ct_out, "matrix file to write")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the construction checks over a field sweep");
    std::string vf_fields;
    verify
        ->add_option("--fields", vf_fields,
                     "comma-separated field orders, e.g. \"5,7,11\" or \"9:poly=2,1,1\"")
        ->required();

    // demo
    app.add_subcommand("demo", "run the built-in GF(89) worked example");

    // inspect
    auto* inspect = app.add_subcommand("inspect", "print a matrix file and its weight");
    FieldOpts in_field;
    in_field.attach(inspect);
    std::string in_path;
    inspect->add_option("--in", in_path, "matrix file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (keygen->parsed()) return cmd_keygen(kg_field, kg_t, kg_r, kg_out);
        if (encrypt->parsed()) return cmd_encrypt(enc_key, enc_in, enc_out, enc_pretty);
        if (decrypt->parsed()) return cmd_decrypt(dec_key, dec_in, dec_out);
        if (construct->parsed())
            return cmd_construct(ct_field, ct_kind, ct_t, ct_t2, ct_r, ct_k, ct_order,
                                 ct_hadamard, ct_out);
        if (verify->parsed()) return cmd_verify(vf_fields);
        if (app.get_subcommand("demo")->parsed()) return cmd_demo();
        if (inspect->parsed()) return cmd_inspect(in_field, in_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
