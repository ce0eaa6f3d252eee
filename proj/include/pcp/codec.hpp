/**
 * Bit-exact serialization of all domain types.
 *
 * Every value is framed as a WireRecord: magic "PCP1", a one-byte kind tag,
 * a little-endian u32 payload length, then the payload. RingElement
 * coefficients are fixed-width little-endian (u16 when q < 2^16, u32
 * otherwise); binary vectors pack LSB-first; composite types are the
 * concatenation of their component records; ParamSet is (n, q, sigma*1000)
 * as three u32.
 */

#ifndef PCP_CODEC_HPP
#define PCP_CODEC_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pcp/kex.hpp"
#include "pcp/ot.hpp"
#include "pcp/pkc.hpp"
#include "pcp/zkp.hpp"

namespace pcp {

enum class RecordKind : uint8_t {
    ParamSetRec = 0x01,
    RingElementRec = 0x02,
    BinaryVectorRec = 0x03,
    PublicKeyRec = 0x04,
    SecretKeyRec = 0x05,
    CiphertextRec = 0x06,
    OtRequestRec = 0x10,
    OtResponseRec = 0x11,
    ZkpStatementRec = 0x20,
    ZkpChallengeRec = 0x21,
    ZkpResponseRec = 0x22,
    SeedRec = 0x30,
};

struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// Raw framed record; payload interpretation depends on kind.
struct WireRecord {
    RecordKind kind;
    Bytes payload;

    bool operator==(const WireRecord&) const = default;
};

Bytes frame(RecordKind kind, ByteView payload);

/// Reads one record starting at `offset`, advancing it past the record.
/// Throws CodecError on bad magic, unknown kind, or truncation.
WireRecord read_record(ByteView bytes, size_t& offset);

Bytes encode(const ParamSet& v);
Bytes encode(const ParamSet& p, const RingElement& v);
Bytes encode(const ParamSet& p, const BinaryVector& v);
Bytes encode(const ParamSet& p, const PublicKey& v);
Bytes encode(const ParamSet& p, const SecretKey& v);
Bytes encode(const ParamSet& p, const Ciphertext& v);
Bytes encode(const ParamSet& p, const OtRequest& v);
Bytes encode(const ParamSet& p, const OtResponse& v);
Bytes encode(const ParamSet& p, const ZkpStatement& v);
Bytes encode(const ParamSet& p, const ZkpChallenge& v);
Bytes encode(const ParamSet& p, const ZkpResponse& v);
Bytes encode_seed(const Seed& seed);

/// Decoders validate every type invariant (lengths, coefficient < q) and
/// throw CodecError on kind mismatch or malformed bytes.
ParamSet decode_params(ByteView bytes);
RingElement decode_ring_element(const ParamSet& p, ByteView bytes);
BinaryVector decode_binary_vector(const ParamSet& p, ByteView bytes);
PublicKey decode_public_key(const ParamSet& p, ByteView bytes);
SecretKey decode_secret_key(const ParamSet& p, ByteView bytes);
Ciphertext decode_ciphertext(const ParamSet& p, ByteView bytes);
OtRequest decode_ot_request(const ParamSet& p, ByteView bytes);
OtResponse decode_ot_response(const ParamSet& p, ByteView bytes);
ZkpStatement decode_zkp_statement(const ParamSet& p, ByteView bytes);
ZkpChallenge decode_zkp_challenge(const ParamSet& p, ByteView bytes);
ZkpResponse decode_zkp_response(const ParamSet& p, ByteView bytes);
Seed decode_seed(ByteView bytes);

} // namespace pcp

#endif // PCP_CODEC_HPP
