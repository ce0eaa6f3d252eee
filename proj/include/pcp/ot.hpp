/**
 * 1-out-of-l oblivious transfer over the PKC primitive.
 *
 * Three flows: sender publishes pk and l uniform ring masks {r_i}; the
 * receiver encrypts a random pad K and adds the chosen mask to the first
 * ciphertext component (v0 = e0 + r_c, v1 = e1); the sender decrypts
 * (v0 - r_i, v1) for every i and XORs each result onto m_i. Only index c
 * cancels the mask exactly, so m'_c = K xor m_c; every other m'_i is
 * randomized by the uniform mask difference.
 *
 * Masks are uniform over R_q, not binary: binary masks differ by at most 1
 * per coefficient, which the decryption rounding absorbs, and every m'_i
 * would then expose its message.
 */

#ifndef PCP_OT_HPP
#define PCP_OT_HPP

#include <utility>
#include <vector>

#include "pcp/pkc.hpp"

namespace pcp {

struct OtSenderState {
    std::vector<BinaryVector> messages;  // m_1 .. m_l
    std::vector<RingElement> masks;      // r_1 .. r_l, uniform over R_q
    SecretKey sk;
    PublicKey pk;
};

struct OtReceiverState {
    uint32_t choice = 0;  // 1-based index c
    BinaryVector pad;     // K
    PublicKey pk;
};

struct OtRequest {
    RingElement v0;
    RingElement v1;

    bool operator==(const OtRequest&) const = default;
};

struct OtResponse {
    std::vector<BinaryVector> masked;  // m'_1 .. m'_l

    bool operator==(const OtResponse&) const = default;
};

/// Flow 1 payload is state.pk plus state.masks.
/// Throws std::invalid_argument on an empty message list.
OtSenderState ot_sender_setup(const Context& ctx,
                              std::vector<BinaryVector> messages, Drbg& rng);

/// choice is 1-based; throws std::out_of_range when outside [1, l].
std::pair<OtReceiverState, OtRequest> ot_receiver_choose(
    const Context& ctx, uint32_t choice, const std::vector<RingElement>& masks,
    const PublicKey& pk, Drbg& rng);

/// Test hook: explicit pad and encryption randomness.
std::pair<OtReceiverState, OtRequest> ot_receiver_choose_with(
    const Context& ctx, uint32_t choice, const std::vector<RingElement>& masks,
    const PublicKey& pk, const BinaryVector& pad,
    const RingElement& r0, const RingElement& r1, const RingElement& r2);

OtResponse ot_sender_respond(const Context& ctx, const OtSenderState& state,
                             const OtRequest& req);

BinaryVector ot_receiver_finish(const OtReceiverState& state, const OtResponse& resp);

} // namespace pcp

#endif // PCP_OT_HPP
