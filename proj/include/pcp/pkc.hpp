/**
 * Ring-LWE public-key cryptosystem.
 *
 *   keygen:   b = a * s + e,          pk = {a, b}, sk = {s}
 *   encrypt:  c0 = b * r0 + r2 + t*m, c1 = a * r0 + r1
 *   decrypt:  m = round_to_binary(c0 - c1 * s)
 *
 * All products go through the Context's configured multiplier backend.
 * The *_with variants take explicit randomness so the zero-noise and
 * identity cases are directly executable in tests.
 */

#ifndef PCP_PKC_HPP
#define PCP_PKC_HPP

#include "pcp/multiplier.hpp"
#include "pcp/ring.hpp"
#include "pcp/sampler.hpp"

namespace pcp {

/// One ring + one multiplier backend + the Gaussian table for its sigma.
struct Context {
    ParamSet params;
    Multiplier mul;
    GaussianTable gauss;

    Context(const ParamSet& p, Backend backend)
        : params(p), mul(p, backend), gauss(p.sigma) {}
};

struct PublicKey {
    RingElement a;
    RingElement b;

    bool operator==(const PublicKey&) const = default;
};

struct SecretKey {
    RingElement s;

    bool operator==(const SecretKey&) const = default;
};

struct Ciphertext {
    RingElement c0;
    RingElement c1;

    bool operator==(const Ciphertext&) const = default;
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

KeyPair keygen(const Context& ctx, Drbg& rng);
KeyPair keygen_with(const Context& ctx, const RingElement& a,
                    const RingElement& s, const RingElement& e);

Ciphertext encrypt(const Context& ctx, const PublicKey& pk,
                   const BinaryVector& m, Drbg& rng);
Ciphertext encrypt_with(const Context& ctx, const PublicKey& pk, const BinaryVector& m,
                        const RingElement& r0, const RingElement& r1, const RingElement& r2);

BinaryVector decrypt(const Context& ctx, const SecretKey& sk, const Ciphertext& ct);

/// Infinity norm of c0 - c1*s - t*m for the true plaintext m. Decryption is
/// guaranteed correct when this is < floor(q/4) - 1.
uint32_t decryption_noise(const Context& ctx, const SecretKey& sk,
                          const Ciphertext& ct, const BinaryVector& m);

/// The correctness margin floor(q/4) - 1.
inline uint32_t noise_bound(const ParamSet& params) { return params.q / 4 - 1; }

} // namespace pcp

#endif // PCP_PKC_HPP
