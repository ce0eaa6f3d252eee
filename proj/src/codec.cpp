#include "pcp/codec.hpp"

#include <cmath>
#include <cstring>

namespace pcp {

namespace {

constexpr uint8_t kMagic[4] = {'P', 'C', 'P', '1'};

bool known_kind(uint8_t k) {
    switch (static_cast<RecordKind>(k)) {
        case RecordKind::ParamSetRec:
        case RecordKind::RingElementRec:
        case RecordKind::BinaryVectorRec:
        case RecordKind::PublicKeyRec:
        case RecordKind::SecretKeyRec:
        case RecordKind::CiphertextRec:
        case RecordKind::OtRequestRec:
        case RecordKind::OtResponseRec:
        case RecordKind::ZkpStatementRec:
        case RecordKind::ZkpChallengeRec:
        case RecordKind::ZkpResponseRec:
        case RecordKind::SeedRec:
            return true;
    }
    return false;
}

void put_u32(Bytes& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

uint32_t get_u32(ByteView b, size_t off) {
    return static_cast<uint32_t>(b[off]) | (static_cast<uint32_t>(b[off + 1]) << 8) |
           (static_cast<uint32_t>(b[off + 2]) << 16) |
           (static_cast<uint32_t>(b[off + 3]) << 24);
}

bool wide_coeffs(const ParamSet& p) { return p.q >= (1u << 16); }

Bytes ring_payload(const ParamSet& p, const RingElement& v) {
    check_element(p, v);
    Bytes out;
    if (wide_coeffs(p)) {
        out.reserve(4 * p.n);
        for (uint32_t c : v.coeffs) put_u32(out, c);
    } else {
        out.reserve(2 * p.n);
        for (uint32_t c : v.coeffs) {
            out.push_back(static_cast<uint8_t>(c));
            out.push_back(static_cast<uint8_t>(c >> 8));
        }
    }
    return out;
}

RingElement ring_from_payload(const ParamSet& p, ByteView payload) {
    const size_t width = wide_coeffs(p) ? 4 : 2;
    if (payload.size() != width * p.n)
        throw CodecError("ring element payload has wrong size");
    RingElement v;
    v.coeffs.resize(p.n);
    for (uint32_t i = 0; i < p.n; ++i) {
        uint32_t c = 0;
        for (size_t b = 0; b < width; ++b)
            c |= static_cast<uint32_t>(payload[width * i + b]) << (8 * b);
        if (c >= p.q) throw CodecError("coefficient out of range");
        v.coeffs[i] = c;
    }
    return v;
}

Bytes binary_payload(const ParamSet& p, const BinaryVector& v) {
    check_binary(p, v);
    Bytes out((p.n + 7) / 8, 0);
    for (uint32_t i = 0; i < p.n; ++i) {
        if (v.bits[i]) out[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    }
    return out;
}

BinaryVector binary_from_payload(const ParamSet& p, ByteView payload) {
    if (payload.size() != (p.n + 7) / 8)
        throw CodecError("binary vector payload has wrong size");
    BinaryVector v;
    v.bits.resize(p.n);
    for (uint32_t i = 0; i < p.n; ++i)
        v.bits[i] = (payload[i / 8] >> (i % 8)) & 1;
    // Trailing pad bits must be zero.
    for (size_t b = p.n; b < payload.size() * 8; ++b) {
        if ((payload[b / 8] >> (b % 8)) & 1)
            throw CodecError("nonzero padding bit in binary vector");
    }
    return v;
}

Bytes concat(std::initializer_list<Bytes> parts) {
    Bytes out;
    for (const Bytes& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

WireRecord expect(ByteView bytes, RecordKind kind) {
    size_t off = 0;
    WireRecord rec = read_record(bytes, off);
    if (off != bytes.size()) throw CodecError("trailing bytes after record");
    if (rec.kind != kind) throw CodecError("record kind mismatch");
    return rec;
}

// Splits a composite payload into its component records.
std::vector<WireRecord> split_records(ByteView payload) {
    std::vector<WireRecord> recs;
    size_t off = 0;
    while (off < payload.size()) recs.push_back(read_record(payload, off));
    return recs;
}

WireRecord component(const std::vector<WireRecord>& recs, size_t i, RecordKind kind) {
    if (i >= recs.size()) throw CodecError("composite record missing a component");
    if (recs[i].kind != kind) throw CodecError("composite component kind mismatch");
    return recs[i];
}

} // namespace

Bytes frame(RecordKind kind, ByteView payload) {
    Bytes out;
    out.reserve(9 + payload.size());
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    out.push_back(static_cast<uint8_t>(kind));
    put_u32(out, static_cast<uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

WireRecord read_record(ByteView bytes, size_t& offset) {
    if (bytes.size() - offset < 9) throw CodecError("truncated record header");
    if (std::memcmp(bytes.data() + offset, kMagic, 4) != 0)
        throw CodecError("bad record magic");
    uint8_t kind = bytes[offset + 4];
    if (!known_kind(kind)) throw CodecError("unknown record kind");
    uint32_t len = get_u32(bytes, offset + 5);
    if (bytes.size() - offset - 9 < len) throw CodecError("truncated record payload");
    WireRecord rec;
    rec.kind = static_cast<RecordKind>(kind);
    rec.payload.assign(bytes.begin() + static_cast<ptrdiff_t>(offset + 9),
                       bytes.begin() + static_cast<ptrdiff_t>(offset + 9 + len));
    offset += 9 + len;
    return rec;
}

Bytes encode(const ParamSet& v) {
    Bytes payload;
    put_u32(payload, v.n);
    put_u32(payload, v.q);
    put_u32(payload, static_cast<uint32_t>(std::lround(v.sigma * 1000.0)));
    return frame(RecordKind::ParamSetRec, payload);
}

Bytes encode(const ParamSet& p, const RingElement& v) {
    return frame(RecordKind::RingElementRec, ring_payload(p, v));
}

Bytes encode(const ParamSet& p, const BinaryVector& v) {
    return frame(RecordKind::BinaryVectorRec, binary_payload(p, v));
}

Bytes encode(const ParamSet& p, const PublicKey& v) {
    return frame(RecordKind::PublicKeyRec, concat({encode(p, v.a), encode(p, v.b)}));
}

Bytes encode(const ParamSet& p, const SecretKey& v) {
    return frame(RecordKind::SecretKeyRec, encode(p, v.s));
}

Bytes encode(const ParamSet& p, const Ciphertext& v) {
    return frame(RecordKind::CiphertextRec, concat({encode(p, v.c0), encode(p, v.c1)}));
}

Bytes encode(const ParamSet& p, const OtRequest& v) {
    return frame(RecordKind::OtRequestRec, concat({encode(p, v.v0), encode(p, v.v1)}));
}

Bytes encode(const ParamSet& p, const OtResponse& v) {
    Bytes payload;
    for (const BinaryVector& m : v.masked) {
        Bytes rec = encode(p, m);
        payload.insert(payload.end(), rec.begin(), rec.end());
    }
    return frame(RecordKind::OtResponseRec, payload);
}

Bytes encode(const ParamSet& p, const ZkpStatement& v) {
    return frame(RecordKind::ZkpStatementRec,
                 concat({encode(p, v.a), encode(p, v.b), encode(p, v.m), encode(p, v.c)}));
}

Bytes encode(const ParamSet& p, const ZkpChallenge& v) {
    return frame(RecordKind::ZkpChallengeRec, encode(p, v.u));
}

Bytes encode(const ParamSet& p, const ZkpResponse& v) {
    return frame(RecordKind::ZkpResponseRec, encode(p, v.x));
}

Bytes encode_seed(const Seed& seed) {
    return frame(RecordKind::SeedRec, ByteView(seed.data(), seed.size()));
}

ParamSet decode_params(ByteView bytes) {
    WireRecord rec = expect(bytes, RecordKind::ParamSetRec);
    if (rec.payload.size() != 12) throw CodecError("param set payload has wrong size");
    uint32_t n = get_u32(rec.payload, 0);
    uint32_t q = get_u32(rec.payload, 4);
    uint32_t sigma_milli = get_u32(rec.payload, 8);
    try {
        return make_params(n, q, static_cast<double>(sigma_milli) / 1000.0);
    } catch (const ParamError& e) {
        throw CodecError(std::string("decoded parameters invalid: ") + e.what());
    }
}

RingElement decode_ring_element(const ParamSet& p, ByteView bytes) {
    return ring_from_payload(p, expect(bytes, RecordKind::RingElementRec).payload);
}

BinaryVector decode_binary_vector(const ParamSet& p, ByteView bytes) {
    return binary_from_payload(p, expect(bytes, RecordKind::BinaryVectorRec).payload);
}

PublicKey decode_public_key(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::PublicKeyRec).payload);
    if (recs.size() != 2) throw CodecError("public key must hold two components");
    return PublicKey{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload),
        ring_from_payload(p, component(recs, 1, RecordKind::RingElementRec).payload)};
}

SecretKey decode_secret_key(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::SecretKeyRec).payload);
    if (recs.size() != 1) throw CodecError("secret key must hold one component");
    return SecretKey{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload)};
}

Ciphertext decode_ciphertext(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::CiphertextRec).payload);
    if (recs.size() != 2) throw CodecError("ciphertext must hold two components");
    return Ciphertext{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload),
        ring_from_payload(p, component(recs, 1, RecordKind::RingElementRec).payload)};
}

OtRequest decode_ot_request(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::OtRequestRec).payload);
    if (recs.size() != 2) throw CodecError("OT request must hold two components");
    return OtRequest{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload),
        ring_from_payload(p, component(recs, 1, RecordKind::RingElementRec).payload)};
}

OtResponse decode_ot_response(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::OtResponseRec).payload);
    if (recs.empty()) throw CodecError("OT response must hold at least one entry");
    OtResponse resp;
    for (size_t i = 0; i < recs.size(); ++i)
        resp.masked.push_back(
            binary_from_payload(p, component(recs, i, RecordKind::BinaryVectorRec).payload));
    return resp;
}

ZkpStatement decode_zkp_statement(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::ZkpStatementRec).payload);
    if (recs.size() != 4) throw CodecError("ZKP statement must hold four components");
    return ZkpStatement{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload),
        ring_from_payload(p, component(recs, 1, RecordKind::RingElementRec).payload),
        binary_from_payload(p, component(recs, 2, RecordKind::BinaryVectorRec).payload),
        ring_from_payload(p, component(recs, 3, RecordKind::RingElementRec).payload)};
}

ZkpChallenge decode_zkp_challenge(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::ZkpChallengeRec).payload);
    if (recs.size() != 1) throw CodecError("ZKP challenge must hold one component");
    return ZkpChallenge{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload)};
}

ZkpResponse decode_zkp_response(const ParamSet& p, ByteView bytes) {
    auto recs = split_records(expect(bytes, RecordKind::ZkpResponseRec).payload);
    if (recs.size() != 1) throw CodecError("ZKP response must hold one component");
    return ZkpResponse{
        ring_from_payload(p, component(recs, 0, RecordKind::RingElementRec).payload)};
}

Seed decode_seed(ByteView bytes) {
    WireRecord rec = expect(bytes, RecordKind::SeedRec);
    if (rec.payload.size() != 32) throw CodecError("seed payload must be 32 bytes");
    Seed s;
    std::memcpy(s.data(), rec.payload.data(), 32);
    return s;
}

} // namespace pcp
