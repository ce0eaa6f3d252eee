#include "pcp/ot.hpp"

#include <stdexcept>

namespace pcp {

OtSenderState ot_sender_setup(const Context& ctx,
                              std::vector<BinaryVector> messages, Drbg& rng) {
    if (messages.empty())
        throw std::invalid_argument("OT requires at least one message");
    for (const auto& m : messages) check_binary(ctx.params, m);

    KeyPair kp = keygen(ctx, rng);
    std::vector<RingElement> masks;
    masks.reserve(messages.size());
    for (size_t i = 0; i < messages.size(); ++i)
        masks.push_back(sample_uniform(ctx.params, rng));
    return OtSenderState{std::move(messages), std::move(masks),
                         std::move(kp.sk), std::move(kp.pk)};
}

std::pair<OtReceiverState, OtRequest> ot_receiver_choose(
    const Context& ctx, uint32_t choice, const std::vector<RingElement>& masks,
    const PublicKey& pk, Drbg& rng) {
    if (choice < 1 || choice > masks.size())
        throw std::out_of_range("OT choice index out of range");
    BinaryVector pad = sample_binary(ctx.params, rng);
    RingElement r0 = sample_gaussian(ctx.params, ctx.gauss, rng);
    RingElement r1 = sample_gaussian(ctx.params, ctx.gauss, rng);
    RingElement r2 = sample_gaussian(ctx.params, ctx.gauss, rng);
    return ot_receiver_choose_with(ctx, choice, masks, pk, pad, r0, r1, r2);
}

std::pair<OtReceiverState, OtRequest> ot_receiver_choose_with(
    const Context& ctx, uint32_t choice, const std::vector<RingElement>& masks,
    const PublicKey& pk, const BinaryVector& pad,
    const RingElement& r0, const RingElement& r1, const RingElement& r2) {
    if (choice < 1 || choice > masks.size())
        throw std::out_of_range("OT choice index out of range");
    Ciphertext enc = encrypt_with(ctx, pk, pad, r0, r1, r2);
    OtRequest req{add(ctx.params, enc.c0, masks[choice - 1]), enc.c1};
    return {OtReceiverState{choice, pad, pk}, std::move(req)};
}

OtResponse ot_sender_respond(const Context& ctx, const OtSenderState& state,
                             const OtRequest& req) {
    check_element(ctx.params, req.v0);
    check_element(ctx.params, req.v1);
    OtResponse resp;
    resp.masked.reserve(state.messages.size());
    for (size_t i = 0; i < state.messages.size(); ++i) {
        Ciphertext ct{sub(ctx.params, req.v0, state.masks[i]), req.v1};
        BinaryVector dec = decrypt(ctx, state.sk, ct);
        resp.masked.push_back(xor_bits(dec, state.messages[i]));
    }
    return resp;
}

BinaryVector ot_receiver_finish(const OtReceiverState& state, const OtResponse& resp) {
    if (state.choice < 1 || state.choice > resp.masked.size())
        throw std::out_of_range("OT response shorter than chosen index");
    return xor_bits(resp.masked[state.choice - 1], state.pad);
}

} // namespace pcp
