#include "pcp/transcript.hpp"

#include <algorithm>
#include <fstream>

namespace pcp {

namespace {

void put_u32(Bytes& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

uint32_t take_u32(ByteView b, size_t& off) {
    if (b.size() - off < 4) throw CodecError("truncated transcript header");
    uint32_t v = static_cast<uint32_t>(b[off]) | (static_cast<uint32_t>(b[off + 1]) << 8) |
                 (static_cast<uint32_t>(b[off + 2]) << 16) |
                 (static_cast<uint32_t>(b[off + 3]) << 24);
    off += 4;
    return v;
}

uint8_t take_u8(ByteView b, size_t& off) {
    if (off >= b.size()) throw CodecError("truncated transcript header");
    return b[off++];
}

void append(Bytes& out, const Bytes& part) {
    out.insert(out.end(), part.begin(), part.end());
}

void push_entry(Transcript& t, uint8_t dir, const Bytes& record_bytes) {
    size_t off = 0;
    t.entries.push_back(TranscriptEntry{dir, read_record(record_bytes, off)});
}

} // namespace

Bytes transcript_encode(const Transcript& t) {
    Bytes out = encode(t.params);
    out.push_back(static_cast<uint8_t>(t.session));
    append(out, encode_seed(t.seed_a));
    append(out, encode_seed(t.seed_b));
    if (t.session == SessionKind::Ot) {
        put_u32(out, t.ot_l);
        put_u32(out, t.ot_choice);
        out.push_back(t.ot_messages_from_seed ? 1 : 0);
        if (!t.ot_messages_from_seed) {
            for (const BinaryVector& m : t.ot_messages) append(out, encode(t.params, m));
        }
    } else if (t.session == SessionKind::Zkp) {
        out.push_back(t.zkp_forge ? 1 : 0);
    }
    for (const TranscriptEntry& e : t.entries) {
        out.push_back(e.direction);
        append(out, frame(e.record.kind, e.record.payload));
    }
    return out;
}

Transcript transcript_decode(ByteView bytes) {
    Transcript t;
    size_t off = 0;
    WireRecord params_rec = read_record(bytes, off);
    t.params = decode_params(frame(params_rec.kind, params_rec.payload));

    uint8_t session = take_u8(bytes, off);
    if (session < 1 || session > 3) throw CodecError("unknown session kind");
    t.session = static_cast<SessionKind>(session);

    WireRecord sa = read_record(bytes, off);
    WireRecord sb = read_record(bytes, off);
    t.seed_a = decode_seed(frame(sa.kind, sa.payload));
    t.seed_b = decode_seed(frame(sb.kind, sb.payload));

    if (t.session == SessionKind::Ot) {
        t.ot_l = take_u32(bytes, off);
        t.ot_choice = take_u32(bytes, off);
        if (t.ot_l < 1) throw CodecError("transcript OT l must be >= 1");
        if (t.ot_choice < 1 || t.ot_choice > t.ot_l)
            throw CodecError("transcript OT choice out of range");
        t.ot_messages_from_seed = take_u8(bytes, off) != 0;
        if (!t.ot_messages_from_seed) {
            for (uint32_t i = 0; i < t.ot_l; ++i) {
                WireRecord m = read_record(bytes, off);
                t.ot_messages.push_back(
                    decode_binary_vector(t.params, frame(m.kind, m.payload)));
            }
        }
    } else if (t.session == SessionKind::Zkp) {
        t.zkp_forge = take_u8(bytes, off) != 0;
    }

    while (off < bytes.size()) {
        uint8_t dir = take_u8(bytes, off);
        if (dir > kDirLocal) throw CodecError("bad entry direction");
        t.entries.push_back(TranscriptEntry{dir, read_record(bytes, off)});
    }
    return t;
}

void transcript_save(const Transcript& t, const std::string& path) {
    Bytes bytes = transcript_encode(t);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

Transcript transcript_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return transcript_decode(bytes);
}

KexSessionResult run_kex_session(const ParamSet& params, Backend backend,
                                 const Seed& seed_a, const Seed& seed_b,
                                 bool include_secret_key) {
    Context ctx(params, backend);
    Drbg rng_a(seed_a);
    Drbg rng_b(seed_b);

    KexSessionResult res;
    res.transcript.params = params;
    res.transcript.session = SessionKind::Kex;
    res.transcript.seed_a = seed_a;
    res.transcript.seed_b = seed_b;

    KeyPair kp = kex_initiate(ctx, rng_a);
    push_entry(res.transcript, kDirAtoB, encode(params, kp.pk));
    if (include_secret_key)
        push_entry(res.transcript, kDirLocal, encode(params, kp.sk));

    auto [ct, responder_secret] = kex_respond(ctx, kp.pk, rng_b);
    push_entry(res.transcript, kDirBtoA, encode(params, ct));

    res.initiator = kex_finalize(ctx, kp.sk, ct);
    res.responder = responder_secret;
    res.agreed = res.initiator.raw == res.responder.raw;
    return res;
}

OtSessionResult run_ot_session(const ParamSet& params, Backend backend,
                               uint32_t l, uint32_t choice,
                               const Seed& seed_a, const Seed& seed_b,
                               std::vector<BinaryVector> messages,
                               bool include_secret_key) {
    if (l < 1) throw std::invalid_argument("OT needs l >= 1");
    if (choice < 1 || choice > l) throw std::out_of_range("OT choice out of range");

    Context ctx(params, backend);
    Drbg rng_a(seed_a);
    Drbg rng_b(seed_b);

    OtSessionResult res;
    res.transcript.params = params;
    res.transcript.session = SessionKind::Ot;
    res.transcript.seed_a = seed_a;
    res.transcript.seed_b = seed_b;
    res.transcript.ot_l = l;
    res.transcript.ot_choice = choice;

    if (messages.empty()) {
        for (uint32_t i = 0; i < l; ++i) messages.push_back(sample_binary(params, rng_a));
        res.transcript.ot_messages_from_seed = true;
    } else {
        if (messages.size() != l)
            throw std::invalid_argument("OT message count must equal l");
        res.transcript.ot_messages_from_seed = false;
        res.transcript.ot_messages = messages;
    }
    res.messages = messages;

    OtSenderState sender = ot_sender_setup(ctx, messages, rng_a);
    push_entry(res.transcript, kDirAtoB, encode(params, sender.pk));
    for (const RingElement& mask : sender.masks)
        push_entry(res.transcript, kDirAtoB, encode(params, mask));
    if (include_secret_key)
        push_entry(res.transcript, kDirLocal, encode(params, sender.sk));

    auto [receiver, req] = ot_receiver_choose(ctx, choice, sender.masks, sender.pk, rng_b);
    push_entry(res.transcript, kDirBtoA, encode(params, req));

    OtResponse resp = ot_sender_respond(ctx, sender, req);
    push_entry(res.transcript, kDirAtoB, encode(params, resp));

    res.recovered = ot_receiver_finish(receiver, resp);
    res.correct = res.recovered == messages[choice - 1];
    return res;
}

ZkpSessionResult run_zkp_session(const ParamSet& params, Backend backend,
                                 const Seed& seed_prover, const Seed& seed_verifier,
                                 bool forge, bool include_secret_key) {
    Context ctx(params, backend);
    Drbg rng_p(seed_prover);
    Drbg rng_v(seed_verifier);

    ZkpSessionResult res;
    res.transcript.params = params;
    res.transcript.session = SessionKind::Zkp;
    res.transcript.seed_a = seed_prover;
    res.transcript.seed_b = seed_verifier;
    res.transcript.zkp_forge = forge;

    RingElement s = sample_gaussian(params, ctx.gauss, rng_p);
    auto [stmt, witness] = zkp_commit(ctx, s, rng_p);
    push_entry(res.transcript, kDirAtoB, encode(params, stmt));
    if (include_secret_key)
        push_entry(res.transcript, kDirLocal, encode(params, SecretKey{s}));

    ZkpChallenge challenge = zkp_challenge(ctx, rng_v);
    push_entry(res.transcript, kDirBtoA, encode(params, challenge));

    ZkpResponse resp = forge ? ZkpResponse{sample_uniform(params, rng_p)}
                             : zkp_respond(ctx, witness, challenge);
    push_entry(res.transcript, kDirAtoB, encode(params, resp));

    res.accepted = zkp_verify(ctx, stmt, challenge, resp);
    return res;
}

ReplayReport transcript_replay(const Transcript& t, Backend backend) {
    Transcript fresh;
    switch (t.session) {
        case SessionKind::Kex: {
            bool with_sk = t.entries.size() > 0 &&
                           std::any_of(t.entries.begin(), t.entries.end(),
                                       [](const TranscriptEntry& e) {
                                           return e.direction == kDirLocal;
                                       });
            fresh = run_kex_session(t.params, backend, t.seed_a, t.seed_b, with_sk)
                        .transcript;
            break;
        }
        case SessionKind::Ot: {
            bool with_sk = std::any_of(t.entries.begin(), t.entries.end(),
                                       [](const TranscriptEntry& e) {
                                           return e.direction == kDirLocal;
                                       });
            std::vector<BinaryVector> messages =
                t.ot_messages_from_seed ? std::vector<BinaryVector>{} : t.ot_messages;
            fresh = run_ot_session(t.params, backend, t.ot_l, t.ot_choice, t.seed_a,
                                   t.seed_b, std::move(messages), with_sk)
                        .transcript;
            break;
        }
        case SessionKind::Zkp: {
            bool with_sk = std::any_of(t.entries.begin(), t.entries.end(),
                                       [](const TranscriptEntry& e) {
                                           return e.direction == kDirLocal;
                                       });
            fresh = run_zkp_session(t.params, backend, t.seed_a, t.seed_b, t.zkp_forge,
                                    with_sk)
                        .transcript;
            break;
        }
    }

    ReplayReport report;
    const size_t common = std::min(t.entries.size(), fresh.entries.size());
    for (size_t i = 0; i < common; ++i) {
        if (!(t.entries[i] == fresh.entries[i])) {
            report.first_divergence = i;
            report.entries_checked = i;
            report.detail = "entry " + std::to_string(i) + " differs from replay";
            return report;
        }
    }
    if (t.entries.size() != fresh.entries.size()) {
        report.first_divergence = common;
        report.entries_checked = common;
        report.detail = "entry count differs (recorded " + std::to_string(t.entries.size()) +
                        ", replay " + std::to_string(fresh.entries.size()) + ")";
        return report;
    }
    report.match = true;
    report.entries_checked = t.entries.size();
    report.detail = "full match";
    return report;
}

} // namespace pcp
