/**
 * Key exchange as a key-encapsulation built from the shared KeyGen / Enc /
 * Dec blocks: the responder encrypts a fresh random binary vector under the
 * initiator's public key and both sides hash it (SHA-256) into a 32-byte
 * session key.
 */

#ifndef PCP_KEX_HPP
#define PCP_KEX_HPP

#include <array>
#include <utility>

#include "pcp/pkc.hpp"

namespace pcp {

struct SharedSecret {
    std::array<uint8_t, 32> key;  // SHA-256 of the packed raw bits
    BinaryVector raw;

    bool operator==(const SharedSecret&) const = default;
};

/// SHA-256 of a binary vector packed LSB-first into ceil(n/8) bytes.
std::array<uint8_t, 32> hash_bits(const BinaryVector& raw);

/// Same contract as pkc::keygen; the pk is the first flow.
KeyPair kex_initiate(const Context& ctx, Drbg& rng);

/// Encapsulate: k <- fair bits, ct = Enc(pk, k), secret = (H(k), k).
std::pair<Ciphertext, SharedSecret> kex_respond(const Context& ctx,
                                                const PublicKey& pk, Drbg& rng);

/// Decapsulate: raw = Dec(sk, ct).
SharedSecret kex_finalize(const Context& ctx, const SecretKey& sk, const Ciphertext& ct);

} // namespace pcp

#endif // PCP_KEX_HPP
