/**
 * Interactive proof of knowledge of the secret s behind b = a * s + e.
 *
 *   commit:  c = a * r + t*m + e'    (a uniform, m fair bits, r, e' small)
 *   challenge: u small
 *   respond: x = r + s * u
 *   verify:  round_to_binary(c - a*x + b*u) == m
 *
 * For honest transcripts c - a*x + b*u = t*m + e' + e*u exactly, so the
 * check passes whenever |e' + e*u| stays under floor(q/4) - 1 in every
 * coefficient. zkp_noise_failure_estimate() measures that failure
 * probability for a parameter set by Monte Carlo.
 */

#ifndef PCP_ZKP_HPP
#define PCP_ZKP_HPP

#include <utility>

#include "pcp/pkc.hpp"

namespace pcp {

struct ZkpStatement {
    RingElement a;
    RingElement b;
    BinaryVector m;
    RingElement c;

    bool operator==(const ZkpStatement&) const = default;
};

struct ZkpWitness {
    RingElement s;
    RingElement r;
    RingElement e_prime;
};

struct ZkpChallenge {
    RingElement u;

    bool operator==(const ZkpChallenge&) const = default;
};

struct ZkpResponse {
    RingElement x;

    bool operator==(const ZkpResponse&) const = default;
};

std::pair<ZkpStatement, ZkpWitness> zkp_commit(const Context& ctx,
                                               const RingElement& s, Drbg& rng);

/// Test hook: every random draw explicit.
std::pair<ZkpStatement, ZkpWitness> zkp_commit_with(
    const Context& ctx, const RingElement& s, const RingElement& a,
    const RingElement& e, const BinaryVector& m, const RingElement& r,
    const RingElement& e_prime);

ZkpChallenge zkp_challenge(const Context& ctx, Drbg& rng);

ZkpResponse zkp_respond(const Context& ctx, const ZkpWitness& witness,
                        const ZkpChallenge& challenge);

bool zkp_verify(const Context& ctx, const ZkpStatement& stmt,
                const ZkpChallenge& challenge, const ZkpResponse& resp);

/// Monte Carlo estimate of Pr[ |e' + e*u|_inf >= floor(q/4) - 1 ] for fresh
/// Gaussian e, e', u. Anything above ~2^-20 means honest proofs can fail.
double zkp_noise_failure_estimate(const Context& ctx, size_t trials, Drbg& rng);

} // namespace pcp

#endif // PCP_ZKP_HPP
