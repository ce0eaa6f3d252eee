#include <doctest.h>

#include <cmath>
#include <set>

#include "pcp/ot.hpp"
#include "test_util.hpp"

using namespace pcp;
using namespace pcp::test;

namespace {

std::vector<BinaryVector> random_messages(const ParamSet& p, uint32_t l, Drbg& rng) {
    std::vector<BinaryVector> msgs;
    for (uint32_t i = 0; i < l; ++i) msgs.push_back(sample_binary(p, rng));
    return msgs;
}

} // namespace

TEST_CASE("sender setup basics") {
    Context ctx(preset_params("n256"), Backend::Ntt);
    Drbg rng(make_seed(60));

    CHECK_THROWS_AS(ot_sender_setup(ctx, {}, rng), std::invalid_argument);

    auto msgs = random_messages(ctx.params, 1, rng);
    OtSenderState st = ot_sender_setup(ctx, msgs, rng);
    CHECK(st.masks.size() == 1);
    CHECK(st.pk.a.coeffs.size() == ctx.params.n);

    // Determinism under a fixed seed.
    Drbg r1(make_seed(61)), r2(make_seed(61));
    OtSenderState s1 = ot_sender_setup(ctx, msgs, r1);
    OtSenderState s2 = ot_sender_setup(ctx, msgs, r2);
    CHECK(s1.masks[0] == s2.masks[0]);
    CHECK(s1.pk == s2.pk);

    // l=8 masks are pairwise distinct.
    auto msgs8 = random_messages(ctx.params, 8, rng);
    OtSenderState s8 = ot_sender_setup(ctx, msgs8, rng);
    std::set<std::vector<uint32_t>> seen;
    for (const RingElement& r : s8.masks) seen.insert(r.coeffs);
    CHECK(seen.size() == 8);
}

TEST_CASE("receiver choose: masking and range checks") {
    Context ctx(preset_params("toy"), Backend::Schoolbook);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(62));
    auto msgs = random_messages(p, 4, rng);
    OtSenderState sender = ot_sender_setup(ctx, msgs, rng);

    CHECK_THROWS_AS(ot_receiver_choose(ctx, 0, sender.masks, sender.pk, rng),
                    std::out_of_range);
    CHECK_THROWS_AS(ot_receiver_choose(ctx, 5, sender.masks, sender.pk, rng),
                    std::out_of_range);

    // Forced K = 0, zero randomness: v = (r_c, 0).
    RingElement z = zero_element(p);
    auto [st, req] = ot_receiver_choose_with(ctx, 2, sender.masks, sender.pk,
                                             from_bits({0, 0, 0, 0}), z, z, z);
    CHECK(req.v0 == sender.masks[1]);
    CHECK(req.v1 == z);

    // General case: v0 - r_c equals the encryption's first component exactly.
    BinaryVector pad = sample_binary(p, rng);
    RingElement r0 = sample_gaussian(p, ctx.gauss, rng);
    RingElement r1 = sample_gaussian(p, ctx.gauss, rng);
    RingElement r2 = sample_gaussian(p, ctx.gauss, rng);
    auto [st2, req2] =
        ot_receiver_choose_with(ctx, 3, sender.masks, sender.pk, pad, r0, r1, r2);
    Ciphertext enc = encrypt_with(ctx, sender.pk, pad, r0, r1, r2);
    CHECK(sub(p, req2.v0, sender.masks[2]) == enc.c0);
    CHECK(req2.v1 == enc.c1);
}

TEST_CASE("masks cancel exactly at the chosen index") {
    Context ctx(preset_params("n256"), Backend::Ntt);
    Drbg rng(make_seed(63));
    auto msgs = random_messages(ctx.params, 4, rng);
    OtSenderState sender = ot_sender_setup(ctx, msgs, rng);
    auto [receiver, req] = ot_receiver_choose(ctx, 3, sender.masks, sender.pk, rng);
    OtResponse resp = ot_sender_respond(ctx, sender, req);

    // m'_c = K xor m_c, so m'_c xor K recovers m_c.
    CHECK(xor_bits(resp.masked[2], receiver.pad) == msgs[2]);
    CHECK(ot_receiver_finish(receiver, resp) == msgs[2]);
}

TEST_CASE("l = 1 with zero pad and zero randomness passes the message through") {
    Context ctx(preset_params("toy"), Backend::Schoolbook);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(64));
    auto msgs = random_messages(p, 1, rng);
    OtSenderState sender = ot_sender_setup(ctx, msgs, rng);
    RingElement z = zero_element(p);
    auto [receiver, req] = ot_receiver_choose_with(ctx, 1, sender.masks, sender.pk,
                                                   from_bits({0, 0, 0, 0}), z, z, z);
    OtResponse resp = ot_sender_respond(ctx, sender, req);
    CHECK(resp.masked[0] == msgs[0]);
    CHECK(ot_receiver_finish(receiver, resp) == msgs[0]);
}

TEST_CASE("full protocol recovers m_c for every choice") {
    Context ctx(preset_params("n256"), Backend::Ntt);
    Drbg rng(make_seed(65));
    for (uint32_t c = 1; c <= 4; ++c) {
        auto msgs = random_messages(ctx.params, 4, rng);
        OtSenderState sender = ot_sender_setup(ctx, msgs, rng);
        auto [receiver, req] = ot_receiver_choose(ctx, c, sender.masks, sender.pk, rng);
        OtResponse resp = ot_sender_respond(ctx, sender, req);
        REQUIRE(ot_receiver_finish(receiver, resp) == msgs[c - 1]);
    }
}

TEST_CASE("non-chosen entries stay scrambled") {
    Context ctx(preset_params("n256"), Backend::Ntt);
    const uint32_t n = ctx.params.n;
    Drbg rng(make_seed(66));
    double weight_sum = 0.0;
    size_t weight_count = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto msgs = random_messages(ctx.params, 4, rng);
        OtSenderState sender = ot_sender_setup(ctx, msgs, rng);
        uint32_t c = 1 + rng.next_u32() % 4;
        auto [receiver, req] = ot_receiver_choose(ctx, c, sender.masks, sender.pk, rng);
        OtResponse resp = ot_sender_respond(ctx, sender, req);
        for (uint32_t i = 1; i <= 4; ++i) {
            if (i == c) continue;
            BinaryVector guess = xor_bits(resp.masked[i - 1], receiver.pad);
            REQUIRE(guess != msgs[i - 1]);
            weight_sum += hamming_weight(xor_bits(guess, msgs[i - 1]));
            ++weight_count;
        }
    }
    // Hamming distance of the bogus recovery should hover around n/2.
    double mean = weight_sum / static_cast<double>(weight_count);
    CHECK(mean > n / 2.0 - 2.0 * std::sqrt(static_cast<double>(n)));
    CHECK(mean < n / 2.0 + 2.0 * std::sqrt(static_cast<double>(n)));
}
