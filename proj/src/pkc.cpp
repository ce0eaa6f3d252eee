#include "pcp/pkc.hpp"

namespace pcp {

KeyPair keygen(const Context& ctx, Drbg& rng) {
    RingElement a = sample_uniform(ctx.params, rng);
    RingElement s = sample_gaussian(ctx.params, ctx.gauss, rng);
    RingElement e = sample_gaussian(ctx.params, ctx.gauss, rng);
    return keygen_with(ctx, a, s, e);
}

KeyPair keygen_with(const Context& ctx, const RingElement& a,
                    const RingElement& s, const RingElement& e) {
    RingElement b = add(ctx.params, ctx.mul.mul(a, s), e);
    return KeyPair{PublicKey{a, b}, SecretKey{s}};
}

Ciphertext encrypt(const Context& ctx, const PublicKey& pk,
                   const BinaryVector& m, Drbg& rng) {
    RingElement r0 = sample_gaussian(ctx.params, ctx.gauss, rng);
    RingElement r1 = sample_gaussian(ctx.params, ctx.gauss, rng);
    RingElement r2 = sample_gaussian(ctx.params, ctx.gauss, rng);
    return encrypt_with(ctx, pk, m, r0, r1, r2);
}

Ciphertext encrypt_with(const Context& ctx, const PublicKey& pk, const BinaryVector& m,
                        const RingElement& r0, const RingElement& r1, const RingElement& r2) {
    const ParamSet& p = ctx.params;
    RingElement c0 = add(p, add(p, ctx.mul.mul(pk.b, r0), r2), lift_binary(p, m));
    RingElement c1 = add(p, ctx.mul.mul(pk.a, r0), r1);
    return Ciphertext{c0, c1};
}

BinaryVector decrypt(const Context& ctx, const SecretKey& sk, const Ciphertext& ct) {
    RingElement v = sub(ctx.params, ct.c0, ctx.mul.mul(ct.c1, sk.s));
    return round_to_binary(ctx.params, v);
}

uint32_t decryption_noise(const Context& ctx, const SecretKey& sk,
                          const Ciphertext& ct, const BinaryVector& m) {
    const ParamSet& p = ctx.params;
    RingElement v = sub(p, ct.c0, ctx.mul.mul(ct.c1, sk.s));
    RingElement noise = sub(p, v, lift_binary(p, m));
    return infinity_norm(p, noise);
}

} // namespace pcp
