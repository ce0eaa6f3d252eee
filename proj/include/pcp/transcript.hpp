/**
 * Append-only protocol transcripts (.pcpt) for record/replay.
 *
 * Layout: ParamSet record, one session-kind byte, the two party Seed
 * records, a small session header (OT: l, choice, message source; ZKP:
 * forge flag), then the ordered flow entries. Each entry is one direction
 * byte (0 = A to B, 1 = B to A, 2 = local, never sent) followed by a
 * WireRecord. Sessions are pure functions of their seeds, so replaying a
 * transcript regenerates every entry byte-exactly.
 *
 * SecretKey entries (direction 2) appear only when a session is recorded
 * with include_secret_key set; default transcripts omit them.
 */

#ifndef PCP_TRANSCRIPT_HPP
#define PCP_TRANSCRIPT_HPP

#include <optional>
#include <string>

#include "pcp/codec.hpp"

namespace pcp {

enum class SessionKind : uint8_t { Kex = 1, Ot = 2, Zkp = 3 };

inline constexpr uint8_t kDirAtoB = 0;
inline constexpr uint8_t kDirBtoA = 1;
inline constexpr uint8_t kDirLocal = 2;

struct TranscriptEntry {
    uint8_t direction;
    WireRecord record;

    bool operator==(const TranscriptEntry&) const = default;
};

struct Transcript {
    ParamSet params;
    SessionKind session;
    Seed seed_a{};
    Seed seed_b{};

    // OT session header
    uint32_t ot_l = 0;
    uint32_t ot_choice = 0;
    bool ot_messages_from_seed = true;
    std::vector<BinaryVector> ot_messages;  // populated when external

    // ZKP session header
    bool zkp_forge = false;

    std::vector<TranscriptEntry> entries;
};

Bytes transcript_encode(const Transcript& t);
Transcript transcript_decode(ByteView bytes);

void transcript_save(const Transcript& t, const std::string& path);
Transcript transcript_load(const std::string& path);

struct KexSessionResult {
    Transcript transcript;
    SharedSecret initiator;
    SharedSecret responder;
    bool agreed = false;
};

struct OtSessionResult {
    Transcript transcript;
    std::vector<BinaryVector> messages;
    BinaryVector recovered;
    bool correct = false;
};

struct ZkpSessionResult {
    Transcript transcript;
    bool accepted = false;
};

/// Deterministic in-process two-party runs; the transcript records every
/// flow in order.
KexSessionResult run_kex_session(const ParamSet& params, Backend backend,
                                 const Seed& seed_a, const Seed& seed_b,
                                 bool include_secret_key = false);

/// messages empty means "derive l pads from seed_a before key generation".
OtSessionResult run_ot_session(const ParamSet& params, Backend backend,
                               uint32_t l, uint32_t choice,
                               const Seed& seed_a, const Seed& seed_b,
                               std::vector<BinaryVector> messages = {},
                               bool include_secret_key = false);

/// forge replaces the honest response with a uniform random x.
ZkpSessionResult run_zkp_session(const ParamSet& params, Backend backend,
                                 const Seed& seed_prover, const Seed& seed_verifier,
                                 bool forge = false, bool include_secret_key = false);

struct ReplayReport {
    bool match = false;
    size_t entries_checked = 0;
    std::optional<size_t> first_divergence;
    std::string detail;
};

/// Re-executes the recorded session from its seeds and compares every entry
/// byte-exactly against the transcript.
ReplayReport transcript_replay(const Transcript& t, Backend backend = Backend::Ntt);

} // namespace pcp

#endif // PCP_TRANSCRIPT_HPP
