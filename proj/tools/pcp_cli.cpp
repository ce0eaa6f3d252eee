/**
 * pcp — command line front end for the Ring-LWE primitive suite.
 *
 * Subcommands: keygen, enc, dec, ot-run, zkp-run, replay, bench.
 * Exit codes: 0 success, 1 verification/protocol failure, 2 usage or
 * parameter error.
 *
 * Key and ciphertext files are self-describing: a ParamSet record followed
 * by the value record. Messages on the command line are hex strings of the
 * LSB-first packed bit payload (2 * ceil(n/8) characters).
 */

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pcp/codec.hpp"
#include "pcp/transcript.hpp"

namespace {

using namespace pcp;

constexpr int kExitOk = 0;
constexpr int kExitProtocolFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const Bytes& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

ParamSet resolve_params(const std::string& preset, uint32_t n, uint32_t q, double sigma) {
    if (!preset.empty()) return preset_params(preset);
    if (n == 0 || q == 0 || sigma <= 0.0)
        throw UsageError("give --params or all of --n, --q, --sigma");
    return make_params(n, q, sigma);
}

Backend resolve_backend(const std::string& name) {
    auto b = backend_from_name(name);
    if (!b) throw UsageError("unknown backend: " + name);
    return *b;
}

// File = ParamSet record + value record.
template <typename T>
void save_keyed(const std::string& path, const ParamSet& p, const T& value) {
    Bytes out = encode(p);
    Bytes rec = encode(p, value);
    out.insert(out.end(), rec.begin(), rec.end());
    write_file(path, out);
}

std::pair<ParamSet, WireRecord> load_keyed(const std::string& path) {
    Bytes bytes = read_file(path);
    size_t off = 0;
    WireRecord params_rec = read_record(bytes, off);
    ParamSet p = decode_params(frame(params_rec.kind, params_rec.payload));
    WireRecord value = read_record(bytes, off);
    if (off != bytes.size()) throw CodecError("trailing bytes in " + path);
    return {p, value};
}

std::string bits_to_hex(const BinaryVector& m) {
    Bytes packed((m.bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < m.bits.size(); ++i)
        if (m.bits[i]) packed[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t b : packed) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

BinaryVector bits_from_hex(const ParamSet& p, const std::string& hex) {
    const size_t expect = 2 * ((p.n + 7) / 8);
    if (hex.size() != expect)
        throw UsageError("message must be " + std::to_string(expect) +
                         " hex characters for n=" + std::to_string(p.n));
    auto nibble = [](char c) -> uint8_t {
        if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<uint8_t>(c - 'A' + 10);
        throw UsageError("message contains a non-hex character");
    };
    BinaryVector m;
    m.bits.resize(p.n);
    for (uint32_t i = 0; i < p.n; ++i) {
        uint8_t byte = static_cast<uint8_t>((nibble(hex[2 * (i / 8)]) << 4) |
                                            nibble(hex[2 * (i / 8) + 1]));
        m.bits[i] = (byte >> (i % 8)) & 1;
    }
    // Pad bits beyond n must be zero.
    for (size_t b = p.n; b < 8 * (expect / 2); ++b) {
        uint8_t byte = static_cast<uint8_t>((nibble(hex[2 * (b / 8)]) << 4) |
                                            nibble(hex[2 * (b / 8) + 1]));
        if ((byte >> (b % 8)) & 1) throw UsageError("nonzero padding bit in message");
    }
    return m;
}

std::vector<BinaryVector> messages_from_file(const ParamSet& p, const std::string& path,
                                             uint32_t l) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open message file " + path);
    std::vector<BinaryVector> msgs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        msgs.push_back(bits_from_hex(p, line));
    }
    if (msgs.size() != l)
        throw UsageError("message file holds " + std::to_string(msgs.size()) +
                         " lines, expected l=" + std::to_string(l));
    return msgs;
}

int cmd_keygen(const std::string& preset, uint32_t n, uint32_t q, double sigma,
               const std::string& seed_hex, const std::string& out_prefix,
               const std::string& backend_name) {
    ParamSet p = resolve_params(preset, n, q, sigma);
    Context ctx(p, resolve_backend(backend_name));
    Drbg rng(seed_from_hex(seed_hex));
    KeyPair kp = keygen(ctx, rng);
    save_keyed(out_prefix + ".pk", p, kp.pk);
    save_keyed(out_prefix + ".sk", p, kp.sk);
    std::cout << "wrote " << out_prefix << ".pk and " << out_prefix << ".sk (n=" << p.n
              << " q=" << p.q << ")\n";
    return kExitOk;
}

int cmd_enc(const std::string& pk_path, const std::string& msg_hex,
            const std::string& seed_hex, const std::string& out_path,
            const std::string& backend_name) {
    auto [p, rec] = load_keyed(pk_path);
    PublicKey pk = decode_public_key(p, frame(rec.kind, rec.payload));
    BinaryVector m = bits_from_hex(p, msg_hex);
    Context ctx(p, resolve_backend(backend_name));
    Drbg rng(seed_from_hex(seed_hex));
    Ciphertext ct = encrypt(ctx, pk, m, rng);
    save_keyed(out_path, p, ct);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_dec(const std::string& sk_path, const std::string& ct_path,
            const std::string& backend_name) {
    auto [p, sk_rec] = load_keyed(sk_path);
    SecretKey sk = decode_secret_key(p, frame(sk_rec.kind, sk_rec.payload));
    auto [p2, ct_rec] = load_keyed(ct_path);
    if (p2.n != p.n || p2.q != p.q)
        throw UsageError("ciphertext and key use different parameters");
    Ciphertext ct = decode_ciphertext(p, frame(ct_rec.kind, ct_rec.payload));
    Context ctx(p, resolve_backend(backend_name));
    std::cout << bits_to_hex(decrypt(ctx, sk, ct)) << "\n";
    return kExitOk;
}

int cmd_ot_run(const std::string& preset, uint32_t l, uint32_t choice,
               const std::string& seed_a_hex, const std::string& seed_b_hex,
               const std::string& messages_arg, const std::string& transcript_path,
               bool insecure, const std::string& backend_name) {
    ParamSet p = preset_params(preset.empty() ? "n256" : preset);
    if (choice < 1 || choice > l) throw UsageError("--choice must be in [1, l]");

    std::vector<BinaryVector> messages;
    if (messages_arg != "random") messages = messages_from_file(p, messages_arg, l);

    OtSessionResult res =
        run_ot_session(p, resolve_backend(backend_name), l, choice,
                       seed_from_hex(seed_a_hex), seed_from_hex(seed_b_hex),
                       std::move(messages), insecure);

    std::cout << "recovered m_" << choice << " = " << bits_to_hex(res.recovered) << "\n";
    std::cout << "matches sender message: " << (res.correct ? "yes" : "NO") << "\n";

    // Obliviousness diagnostic: the non-chosen masked entries should look
    // like fair coin flips against the recovered pad.
    Transcript& t = res.transcript;
    const TranscriptEntry& resp_entry = t.entries.back();
    OtResponse resp =
        decode_ot_response(p, frame(resp_entry.record.kind, resp_entry.record.payload));
    double mean_weight = 0.0;
    uint32_t others = 0;
    for (uint32_t i = 1; i <= l; ++i) {
        if (i == choice) continue;
        mean_weight += hamming_weight(resp.masked[i - 1]);
        ++others;
    }
    if (others > 0) {
        mean_weight /= others;
        std::cout << "mean weight of non-chosen masked entries: " << mean_weight << " (n/2 = "
                  << p.n / 2.0 << ")\n";
    }

    if (!transcript_path.empty()) {
        transcript_save(t, transcript_path);
        std::cout << "transcript written to " << transcript_path << "\n";
    }
    return res.correct ? kExitOk : kExitProtocolFailure;
}

int cmd_zkp_run(const std::string& preset, const std::string& seed_p_hex,
                const std::string& seed_v_hex, bool forge,
                const std::string& transcript_path, bool insecure,
                const std::string& backend_name) {
    ParamSet base = preset_params(preset.empty() ? "n256" : preset);
    // The product noise e*u grows with n*sigma^2; sigma=3 keeps honest
    // proofs inside the rounding margin at n=256.
    ParamSet p = preset.empty() ? make_params(base.n, base.q, 3.0) : base;

    ZkpSessionResult res = run_zkp_session(p, resolve_backend(backend_name),
                                           seed_from_hex(seed_p_hex),
                                           seed_from_hex(seed_v_hex), forge, insecure);

    for (size_t i = 0; i < res.transcript.entries.size(); ++i) {
        const auto& e = res.transcript.entries[i];
        std::cout << "flow " << i << " (" << (e.direction == kDirAtoB ? "prover->verifier"
                                                                      : "verifier->prover")
                  << "): kind 0x" << std::hex << static_cast<int>(e.record.kind) << std::dec
                  << ", " << e.record.payload.size() << " payload bytes\n";
    }
    std::cout << (res.accepted ? "ACCEPT" : "REJECT") << "\n";

    if (!transcript_path.empty()) {
        transcript_save(res.transcript, transcript_path);
        std::cout << "transcript written to " << transcript_path << "\n";
    }
    return res.accepted ? kExitOk : kExitProtocolFailure;
}

int cmd_replay(const std::string& transcript_path, const std::string& backend_name) {
    Transcript t = transcript_load(transcript_path);
    ReplayReport report = transcript_replay(t, resolve_backend(backend_name));
    std::cout << (report.match ? "REPLAY MATCH" : "REPLAY DIVERGENCE") << ": "
              << report.detail << " (" << report.entries_checked << " entries checked)\n";
    return report.match ? kExitOk : kExitProtocolFailure;
}

ParamSet bench_params(uint32_t n) {
    switch (n) {
        case 4: return preset_params("toy");
        case 256: return preset_params("n256");
        case 512: return preset_params("n512");
        case 1024: return preset_params("n1024");
        default: throw UsageError("bench supports n in {4, 256, 512, 1024}");
    }
}

int cmd_bench(const std::string& backends_csv, const std::string& ns_csv,
              uint32_t trials, const std::string& csv_path) {
    std::vector<Backend> backends;
    {
        std::stringstream ss(backends_csv);
        std::string item;
        while (std::getline(ss, item, ',')) backends.push_back(resolve_backend(item));
    }
    std::vector<uint32_t> ns;
    {
        std::stringstream ss(ns_csv);
        std::string item;
        while (std::getline(ss, item, ',')) ns.push_back(static_cast<uint32_t>(std::stoul(item)));
    }
    if (backends.empty() || ns.empty() || trials == 0)
        throw UsageError("bench needs backends, n values, and trials > 0");

    std::ostringstream csv;
    csv << "backend,n,q,trials,modmul,median_ns,speedup\n";
    std::printf("%-11s %6s %6s %8s %10s %12s %9s\n", "backend", "n", "q", "trials",
                "modmul", "median_ns", "speedup");

    Seed seed{};
    seed[0] = 0xb3;
    for (uint32_t n : ns) {
        ParamSet p = bench_params(n);
        Drbg rng(seed);
        std::vector<std::pair<RingElement, RingElement>> inputs;
        inputs.reserve(trials);
        for (uint32_t i = 0; i < trials; ++i)
            inputs.emplace_back(sample_uniform(p, rng), sample_uniform(p, rng));

        auto median_ns = [&](const Multiplier& m) -> uint64_t {
            std::vector<uint64_t> times;
            times.reserve(trials);
            for (const auto& [a, b] : inputs) {
                auto t0 = std::chrono::steady_clock::now();
                RingElement c = m.mul(a, b);
                auto t1 = std::chrono::steady_clock::now();
                // Keep the product alive so the call is not optimized out.
                if (c.coeffs[0] == 0xffffffff) std::abort();
                times.push_back(static_cast<uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
            }
            std::sort(times.begin(), times.end());
            return times[times.size() / 2];
        };

        Multiplier schoolbook(p, Backend::Schoolbook);
        uint64_t schoolbook_ns = median_ns(schoolbook);

        for (Backend b : backends) {
            Multiplier m(p, b);
            uint64_t ns_med = (b == Backend::Schoolbook) ? schoolbook_ns : median_ns(m);
            OpCounter ctr = count_ops(m, inputs[0].first, inputs[0].second);
            double speedup = ns_med ? static_cast<double>(schoolbook_ns) / ns_med : 0.0;
            std::printf("%-11s %6u %6u %8u %10llu %12llu %9.2f\n",
                        std::string(backend_name(b)).c_str(), p.n, p.q, trials,
                        static_cast<unsigned long long>(ctr.modmul),
                        static_cast<unsigned long long>(ns_med), speedup);
            csv << backend_name(b) << ',' << p.n << ',' << p.q << ',' << trials << ','
                << ctr.modmul << ',' << ns_med << ',' << speedup << '\n';
        }
    }

    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw UsageError("cannot open " + csv_path + " for writing");
        out << csv.str();
        std::cout << "CSV written to " << csv_path << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ring-LWE post-quantum primitive suite"};
    app.require_subcommand(1);

    std::string preset, backend = "ntt";
    uint32_t n = 0, q = 0;
    double sigma = 0.0;
    std::string seed_hex, seed_b_hex, out_path, pk_path, sk_path, ct_path, msg_hex;
    std::string messages_arg = "random", transcript_path, csv_path;
    std::string bench_backends = "schoolbook,ntt,parm", bench_ns = "256";
    uint32_t l = 2, choice = 1, trials = 10;
    bool forge = false, insecure = false;

    auto* keygen_cmd = app.add_subcommand("keygen", "generate a keypair");
    keygen_cmd->add_option("--params", preset, "toy|n256|n512|n1024");
    keygen_cmd->add_option("--n", n);
    keygen_cmd->add_option("--q", q);
    keygen_cmd->add_option("--sigma", sigma);
    keygen_cmd->add_option("--seed", seed_hex, "64 hex chars")->required();
    keygen_cmd->add_option("--out", out_path, "output prefix")->required();
    keygen_cmd->add_option("--backend", backend, "schoolbook|ntt|parm");

    auto* enc_cmd = app.add_subcommand("enc", "encrypt a binary message");
    enc_cmd->add_option("--pk", pk_path)->required();
    enc_cmd->add_option("--msg", msg_hex, "hex of LSB-first packed bits")->required();
    enc_cmd->add_option("--seed", seed_hex)->required();
    enc_cmd->add_option("--out", out_path)->required();
    enc_cmd->add_option("--backend", backend);

    auto* dec_cmd = app.add_subcommand("dec", "decrypt a ciphertext");
    dec_cmd->add_option("--sk", sk_path)->required();
    dec_cmd->add_option("--ct", ct_path)->required();
    dec_cmd->add_option("--backend", backend);

    auto* ot_cmd = app.add_subcommand("ot-run", "run a 1-of-l oblivious transfer in-process");
    ot_cmd->add_option("--params", preset);
    ot_cmd->add_option("--l", l)->required();
    ot_cmd->add_option("--choice", choice)->required();
    ot_cmd->add_option("--seed-a", seed_hex)->required();
    ot_cmd->add_option("--seed-b", seed_b_hex)->required();
    ot_cmd->add_option("--messages", messages_arg, "'random' or a file of hex lines");
    ot_cmd->add_option("--transcript", transcript_path);
    ot_cmd->add_flag("--insecure-transcript", insecure, "include the secret key record");
    ot_cmd->add_option("--backend", backend);

    auto* zkp_cmd = app.add_subcommand("zkp-run", "run the interactive proof in-process");
    zkp_cmd->add_option("--params", preset);
    zkp_cmd->add_option("--seed-prover", seed_hex)->required();
    zkp_cmd->add_option("--seed-verifier", seed_b_hex)->required();
    zkp_cmd->add_flag("--forge", forge, "replace the response with random x");
    zkp_cmd->add_option("--transcript", transcript_path);
    zkp_cmd->add_flag("--insecure-transcript", insecure);
    zkp_cmd->add_option("--backend", backend);

    auto* replay_cmd = app.add_subcommand("replay", "re-execute and verify a transcript");
    replay_cmd->add_option("--transcript", transcript_path)->required();
    replay_cmd->add_option("--backend", backend);

    auto* bench_cmd = app.add_subcommand("bench", "multiplier backend benchmark");
    bench_cmd->add_option("--backends", bench_backends, "comma separated");
    bench_cmd->add_option("--n", bench_ns, "comma separated ring dimensions");
    bench_cmd->add_option("--trials", trials);
    bench_cmd->add_option("--csv", csv_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (keygen_cmd->parsed())
            return cmd_keygen(preset, n, q, sigma, seed_hex, out_path, backend);
        if (enc_cmd->parsed()) return cmd_enc(pk_path, msg_hex, seed_hex, out_path, backend);
        if (dec_cmd->parsed()) return cmd_dec(sk_path, ct_path, backend);
        if (ot_cmd->parsed())
            return cmd_ot_run(preset, l, choice, seed_hex, seed_b_hex, messages_arg,
                              transcript_path, insecure, backend);
        if (zkp_cmd->parsed())
            return cmd_zkp_run(preset, seed_hex, seed_b_hex, forge, transcript_path,
                               insecure, backend);
        if (replay_cmd->parsed()) return cmd_replay(transcript_path, backend);
        if (bench_cmd->parsed()) return cmd_bench(bench_backends, bench_ns, trials, csv_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CodecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProtocolFailure;
    }
    return kExitUsage;
}
