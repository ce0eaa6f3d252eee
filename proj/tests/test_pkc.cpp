#include <doctest.h>

#include "pcp/pkc.hpp"
#include "test_util.hpp"

using namespace pcp;
using namespace pcp::test;

TEST_CASE("keygen with forced randomness") {
    Context ctx(preset_params("toy"), Backend::Schoolbook);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(30));
    RingElement a = random_element(p, rng);

    SUBCASE("s = e = 0 gives b = 0") {
        KeyPair kp = keygen_with(ctx, a, zero_element(p), zero_element(p));
        CHECK(kp.pk.b == zero_element(p));
        CHECK(kp.pk.a == a);
    }

    SUBCASE("a = 1, e = 0 gives b = s") {
        RingElement s = from_coeffs({1, 16, 0, 2});
        KeyPair kp = keygen_with(ctx, monomial(p, 0), s, zero_element(p));
        CHECK(kp.pk.b == s);
    }

    SUBCASE("general case matches the schoolbook oracle") {
        RingElement s = from_coeffs({1, 0, 16, 1});
        RingElement e = from_coeffs({0, 1, 0, 16});
        KeyPair kp = keygen_with(ctx, from_coeffs({3, 1, 4, 1}), s, e);
        CHECK(kp.pk.b == add(p, schoolbook_mul(p, from_coeffs({3, 1, 4, 1}), s), e));
        CHECK(kp.sk.s == s);
    }
}

TEST_CASE("encrypt with forced randomness") {
    Context ctx(preset_params("toy"), Backend::Schoolbook);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(31));
    KeyPair kp = keygen(ctx, rng);
    RingElement z = zero_element(p);

    BinaryVector m = from_bits({1, 0, 1, 1});
    Ciphertext ct = encrypt_with(ctx, kp.pk, m, z, z, z);
    CHECK(ct.c0 == lift_binary(p, m));
    CHECK(ct.c1 == z);

    Ciphertext ct0 = encrypt_with(ctx, kp.pk, from_bits({0, 0, 0, 0}), z, z, z);
    CHECK(ct0.c0 == z);
    CHECK(ct0.c1 == z);

    // General randomness, recomputed against the oracle.
    RingElement r0 = from_coeffs({1, 16, 0, 1});
    RingElement r1 = from_coeffs({0, 1, 16, 0});
    RingElement r2 = from_coeffs({16, 0, 1, 0});
    Ciphertext ct2 = encrypt_with(ctx, kp.pk, m, r0, r1, r2);
    CHECK(ct2.c0 == add(p, add(p, schoolbook_mul(p, kp.pk.b, r0), r2), lift_binary(p, m)));
    CHECK(ct2.c1 == add(p, schoolbook_mul(p, kp.pk.a, r0), r1));
}

TEST_CASE("decrypt zero-noise ciphertexts") {
    Context ctx(preset_params("toy"), Backend::Schoolbook);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(32));
    KeyPair kp = keygen(ctx, rng);

    BinaryVector m = from_bits({0, 1, 1, 0});
    CHECK(decrypt(ctx, kp.sk, Ciphertext{lift_binary(p, m), zero_element(p)}) == m);
    CHECK(decrypt(ctx, kp.sk, Ciphertext{zero_element(p), zero_element(p)}) ==
          from_bits({0, 0, 0, 0}));
}

TEST_CASE("decryption_noise diagnostic") {
    Context ctx(preset_params("toy"), Backend::Schoolbook);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(33));
    KeyPair kp = keygen(ctx, rng);
    RingElement z = zero_element(p);
    BinaryVector m = from_bits({1, 1, 0, 0});

    CHECK(decryption_noise(ctx, kp.sk, encrypt_with(ctx, kp.pk, m, z, z, z), m) == 0);

    RingElement delta = monomial(p, 2, 2);
    Ciphertext noisy{add(p, lift_binary(p, m), delta), z};
    CHECK(decryption_noise(ctx, kp.sk, noisy, m) == 2);
}

TEST_CASE("algebraic identity c0 - c1 s = e r0 + r2 - r1 s + t m") {
    Context ctx(preset_params("n256"), Backend::Ntt);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(34));
    for (int trial = 0; trial < 25; ++trial) {
        RingElement a = sample_uniform(p, rng);
        RingElement s = sample_gaussian(p, ctx.gauss, rng);
        RingElement e = sample_gaussian(p, ctx.gauss, rng);
        KeyPair kp = keygen_with(ctx, a, s, e);
        BinaryVector m = sample_binary(p, rng);
        RingElement r0 = sample_gaussian(p, ctx.gauss, rng);
        RingElement r1 = sample_gaussian(p, ctx.gauss, rng);
        RingElement r2 = sample_gaussian(p, ctx.gauss, rng);
        Ciphertext ct = encrypt_with(ctx, kp.pk, m, r0, r1, r2);

        RingElement lhs = sub(p, ct.c0, schoolbook_mul(p, ct.c1, s));
        RingElement rhs = add(p,
                              sub(p, add(p, schoolbook_mul(p, e, r0), r2),
                                  schoolbook_mul(p, r1, s)),
                              lift_binary(p, m));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("roundtrip at default parameters") {
    Context ctx(preset_params("n256"), Backend::Ntt);
    const ParamSet& p = ctx.params;
    Drbg rng(make_seed(35));
    KeyPair kp = keygen(ctx, rng);
    const uint32_t bound = noise_bound(p);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryVector m = sample_binary(p, rng);
        Ciphertext ct = encrypt(ctx, kp.pk, m, rng);
        REQUIRE(decrypt(ctx, kp.sk, ct) == m);
        REQUIRE(decryption_noise(ctx, kp.sk, ct, m) < bound);
    }
}

TEST_CASE("backends agree given the same seed") {
    ParamSet p = preset_params("n256");
    Context sb(p, Backend::Schoolbook);
    Context nt(p, Backend::Ntt);
    Context pa(p, Backend::Parm);

    for (int trial = 0; trial < 5; ++trial) {
        Seed seed = make_seed(static_cast<uint8_t>(40 + trial));
        Drbg r1(seed), r2(seed), r3(seed);
        KeyPair k1 = keygen(sb, r1);
        KeyPair k2 = keygen(nt, r2);
        KeyPair k3 = keygen(pa, r3);
        REQUIRE(k1.pk == k2.pk);
        REQUIRE(k1.pk == k3.pk);

        BinaryVector m = sample_binary(p, r1);
        sample_binary(p, r2);
        sample_binary(p, r3);
        Ciphertext c1 = encrypt(sb, k1.pk, m, r1);
        Ciphertext c2 = encrypt(nt, k2.pk, m, r2);
        Ciphertext c3 = encrypt(pa, k3.pk, m, r3);
        REQUIRE(c1 == c2);
        REQUIRE(c1 == c3);
        REQUIRE(decrypt(sb, k1.sk, c1) == m);
        REQUIRE(decrypt(nt, k2.sk, c2) == m);
        REQUIRE(decrypt(pa, k3.sk, c3) == m);
    }
}
