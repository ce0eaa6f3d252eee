#include "pcp/kex.hpp"

#include <openssl/evp.h>

#include <stdexcept>
#include <vector>

namespace pcp {

std::array<uint8_t, 32> hash_bits(const BinaryVector& raw) {
    std::vector<uint8_t> packed((raw.bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < raw.bits.size(); ++i) {
        if (raw.bits[i]) packed[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    }
    std::array<uint8_t, 32> digest{};
    unsigned int len = 0;
    if (EVP_Digest(packed.data(), packed.size(), digest.data(), &len,
                   EVP_sha256(), nullptr) != 1 || len != 32)
        throw std::runtime_error("SHA-256 failed");
    return digest;
}

KeyPair kex_initiate(const Context& ctx, Drbg& rng) {
    return keygen(ctx, rng);
}

std::pair<Ciphertext, SharedSecret> kex_respond(const Context& ctx,
                                                const PublicKey& pk, Drbg& rng) {
    BinaryVector k = sample_binary(ctx.params, rng);
    Ciphertext ct = encrypt(ctx, pk, k, rng);
    return {ct, SharedSecret{hash_bits(k), k}};
}

SharedSecret kex_finalize(const Context& ctx, const SecretKey& sk, const Ciphertext& ct) {
    BinaryVector raw = decrypt(ctx, sk, ct);
    return SharedSecret{hash_bits(raw), raw};
}

} // namespace pcp
