#include "pcp/zkp.hpp"

namespace pcp {

std::pair<ZkpStatement, ZkpWitness> zkp_commit(const Context& ctx,
                                               const RingElement& s, Drbg& rng) {
    RingElement a = sample_uniform(ctx.params, rng);
    RingElement e = sample_gaussian(ctx.params, ctx.gauss, rng);
    BinaryVector m = sample_binary(ctx.params, rng);
    RingElement r = sample_gaussian(ctx.params, ctx.gauss, rng);
    RingElement e_prime = sample_gaussian(ctx.params, ctx.gauss, rng);
    return zkp_commit_with(ctx, s, a, e, m, r, e_prime);
}

std::pair<ZkpStatement, ZkpWitness> zkp_commit_with(
    const Context& ctx, const RingElement& s, const RingElement& a,
    const RingElement& e, const BinaryVector& m, const RingElement& r,
    const RingElement& e_prime) {
    const ParamSet& p = ctx.params;
    RingElement b = add(p, ctx.mul.mul(a, s), e);
    RingElement c = add(p, add(p, ctx.mul.mul(a, r), lift_binary(p, m)), e_prime);
    return {ZkpStatement{a, b, m, c}, ZkpWitness{s, r, e_prime}};
}

ZkpChallenge zkp_challenge(const Context& ctx, Drbg& rng) {
    return ZkpChallenge{sample_gaussian(ctx.params, ctx.gauss, rng)};
}

ZkpResponse zkp_respond(const Context& ctx, const ZkpWitness& witness,
                        const ZkpChallenge& challenge) {
    RingElement x = add(ctx.params, witness.r, ctx.mul.mul(witness.s, challenge.u));
    return ZkpResponse{x};
}

bool zkp_verify(const Context& ctx, const ZkpStatement& stmt,
                const ZkpChallenge& challenge, const ZkpResponse& resp) {
    const ParamSet& p = ctx.params;
    RingElement v = add(p, sub(p, stmt.c, ctx.mul.mul(stmt.a, resp.x)),
                        ctx.mul.mul(stmt.b, challenge.u));
    return round_to_binary(p, v) == stmt.m;
}

double zkp_noise_failure_estimate(const Context& ctx, size_t trials, Drbg& rng) {
    const uint32_t bound = noise_bound(ctx.params);
    size_t failures = 0;
    for (size_t i = 0; i < trials; ++i) {
        RingElement e = sample_gaussian(ctx.params, ctx.gauss, rng);
        RingElement e_prime = sample_gaussian(ctx.params, ctx.gauss, rng);
        RingElement u = sample_gaussian(ctx.params, ctx.gauss, rng);
        RingElement noise = add(ctx.params, e_prime, ctx.mul.mul(e, u));
        if (infinity_norm(ctx.params, noise) >= bound) ++failures;
    }
    return static_cast<double>(failures) / static_cast<double>(trials);
}

} // namespace pcp
