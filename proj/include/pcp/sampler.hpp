/**
 * Deterministic, seedable randomness.
 *
 * Drbg is a ChaCha20 keystream under a 32-byte seed; identical seeds give
 * identical streams. The discrete Gaussian is sampled by inversion of a
 * cumulative distribution table truncated at +-ceil(6*sigma); uniform ring
 * coefficients use rejection sampling so there is no modulo bias.
 */

#ifndef PCP_SAMPLER_HPP
#define PCP_SAMPLER_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pcp/ring.hpp"

namespace pcp {

using Seed = std::array<uint8_t, 32>;

/// Parse a 64-hex-char seed string. Throws std::invalid_argument.
Seed seed_from_hex(std::string_view hex);
std::string seed_to_hex(const Seed& seed);

/// ChaCha20 keystream generator. Stateful: one owner at a time.
class Drbg {
public:
    explicit Drbg(const Seed& seed);

    uint8_t next_byte();
    uint32_t next_u32();
    uint64_t next_u64();
    uint8_t next_bit();
    void fill_bytes(uint8_t* out, size_t len);

private:
    void refill();

    std::array<uint32_t, 16> state_;
    std::array<uint8_t, 64> block_;
    size_t pos_ = 64;
    uint8_t bit_buf_ = 0;
    int bits_left_ = 0;
};

/// Cumulative distribution table of the discrete Gaussian (center 0,
/// parameter sigma, support [-tail, tail] with tail = ceil(6*sigma)).
class GaussianTable {
public:
    explicit GaussianTable(double sigma);

    /// One draw in [-tail, tail].
    int32_t sample(Drbg& rng) const;

    double sigma() const { return sigma_; }
    int32_t tail() const { return tail_; }

    /// Exact moments of the truncated table itself, for statistical checks.
    double mean() const;
    double variance() const;

    const std::vector<uint64_t>& cdf() const { return cdf_; }

private:
    double sigma_;
    int32_t tail_;
    std::vector<uint64_t> cdf_;  // cdf_[i] = P(X <= i - tail) in 2^-63 units
    std::vector<double> probs_;
};

/// Each coefficient an independent discrete Gaussian draw, wrapped mod q.
RingElement sample_gaussian(const ParamSet& params, const GaussianTable& table, Drbg& rng);

/// Each coefficient uniform in [0, q).
RingElement sample_uniform(const ParamSet& params, Drbg& rng);

/// n independent fair bits.
BinaryVector sample_binary(const ParamSet& params, Drbg& rng);

} // namespace pcp

#endif // PCP_SAMPLER_HPP
