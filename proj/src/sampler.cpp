#include "pcp/sampler.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace pcp {

Seed seed_from_hex(std::string_view hex) {
    if (hex.size() != 64)
        throw std::invalid_argument("seed must be 64 hex characters");
    auto nibble = [](char c) -> uint8_t {
        if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<uint8_t>(c - 'A' + 10);
        throw std::invalid_argument("seed contains a non-hex character");
    };
    Seed s;
    for (size_t i = 0; i < 32; ++i)
        s[i] = static_cast<uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return s;
}

std::string seed_to_hex(const Seed& seed) {
    static const char* digits = "0123456789abcdef";
    std::string out(64, '0');
    for (size_t i = 0; i < 32; ++i) {
        out[2 * i] = digits[seed[i] >> 4];
        out[2 * i + 1] = digits[seed[i] & 0xf];
    }
    return out;
}

namespace {

inline uint32_t rotl(uint32_t v, int s) { return std::rotl(v, s); }

inline void quarter_round(uint32_t& a, uint32_t& b, uint32_t& c, uint32_t& d) {
    a += b; d ^= a; d = rotl(d, 16);
    c += d; b ^= c; b = rotl(b, 12);
    a += b; d ^= a; d = rotl(d, 8);
    c += d; b ^= c; b = rotl(b, 7);
}

void chacha20_block(const std::array<uint32_t, 16>& in, std::array<uint8_t, 64>& out) {
    std::array<uint32_t, 16> x = in;
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) {
        uint32_t v = x[i] + in[i];
        out[4 * i + 0] = static_cast<uint8_t>(v);
        out[4 * i + 1] = static_cast<uint8_t>(v >> 8);
        out[4 * i + 2] = static_cast<uint8_t>(v >> 16);
        out[4 * i + 3] = static_cast<uint8_t>(v >> 24);
    }
}

} // namespace

Drbg::Drbg(const Seed& seed) {
    state_[0] = 0x61707865;
    state_[1] = 0x3320646e;
    state_[2] = 0x79622d32;
    state_[3] = 0x6b206574;
    for (int i = 0; i < 8; ++i) {
        state_[4 + i] = static_cast<uint32_t>(seed[4 * i]) |
                        (static_cast<uint32_t>(seed[4 * i + 1]) << 8) |
                        (static_cast<uint32_t>(seed[4 * i + 2]) << 16) |
                        (static_cast<uint32_t>(seed[4 * i + 3]) << 24);
    }
    state_[12] = 0;  // block counter
    state_[13] = 0;
    state_[14] = 0;  // nonce
    state_[15] = 0;
}

void Drbg::refill() {
    chacha20_block(state_, block_);
    if (++state_[12] == 0) ++state_[13];
    pos_ = 0;
}

uint8_t Drbg::next_byte() {
    if (pos_ >= 64) refill();
    return block_[pos_++];
}

uint32_t Drbg::next_u32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(next_byte()) << (8 * i);
    return v;
}

uint64_t Drbg::next_u64() {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(next_byte()) << (8 * i);
    return v;
}

uint8_t Drbg::next_bit() {
    if (bits_left_ == 0) {
        bit_buf_ = next_byte();
        bits_left_ = 8;
    }
    uint8_t b = bit_buf_ & 1;
    bit_buf_ >>= 1;
    --bits_left_;
    return b;
}

void Drbg::fill_bytes(uint8_t* out, size_t len) {
    for (size_t i = 0; i < len; ++i) out[i] = next_byte();
}

GaussianTable::GaussianTable(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("sigma must be positive");
    tail_ = static_cast<int32_t>(std::ceil(6.0 * sigma));

    const size_t count = 2 * static_cast<size_t>(tail_) + 1;
    probs_.resize(count);
    double total = 0.0;
    for (size_t i = 0; i < count; ++i) {
        double k = static_cast<double>(static_cast<int32_t>(i) - tail_);
        probs_[i] = std::exp(-k * k / (2.0 * sigma * sigma));
        total += probs_[i];
    }
    for (double& p : probs_) p /= total;

    // 63-bit fixed point cumulative table; the last entry is forced to the
    // full scale so inversion always terminates.
    const double scale = 9223372036854775808.0;  // 2^63
    cdf_.resize(count);
    double acc = 0.0;
    for (size_t i = 0; i < count; ++i) {
        acc += probs_[i];
        cdf_[i] = static_cast<uint64_t>(acc * scale);
    }
    cdf_.back() = static_cast<uint64_t>(1) << 63;
}

int32_t GaussianTable::sample(Drbg& rng) const {
    uint64_t u = rng.next_u64() >> 1;  // 63 uniform bits
    size_t lo = 0;
    size_t hi = cdf_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (u < cdf_[mid]) hi = mid; else lo = mid + 1;
    }
    return static_cast<int32_t>(lo) - tail_;
}

double GaussianTable::mean() const {
    double m = 0.0;
    for (size_t i = 0; i < probs_.size(); ++i)
        m += probs_[i] * (static_cast<double>(static_cast<int32_t>(i) - tail_));
    return m;
}

double GaussianTable::variance() const {
    double mu = mean();
    double v = 0.0;
    for (size_t i = 0; i < probs_.size(); ++i) {
        double k = static_cast<double>(static_cast<int32_t>(i) - tail_) - mu;
        v += probs_[i] * k * k;
    }
    return v;
}

RingElement sample_gaussian(const ParamSet& params, const GaussianTable& table, Drbg& rng) {
    RingElement r;
    r.coeffs.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i) {
        int32_t v = table.sample(rng);
        r.coeffs[i] = v >= 0 ? static_cast<uint32_t>(v)
                             : params.q - static_cast<uint32_t>(-v);
    }
    return r;
}

RingElement sample_uniform(const ParamSet& params, Drbg& rng) {
    // Mask to the next power of two and reject out-of-range draws.
    uint32_t mask = 1;
    while (mask < params.q) mask <<= 1;
    --mask;
    RingElement r;
    r.coeffs.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i) {
        uint32_t v;
        do {
            v = rng.next_u32() & mask;
        } while (v >= params.q);
        r.coeffs[i] = v;
    }
    return r;
}

BinaryVector sample_binary(const ParamSet& params, Drbg& rng) {
    BinaryVector m;
    m.bits.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i) m.bits[i] = rng.next_bit();
    return m;
}

} // namespace pcp
