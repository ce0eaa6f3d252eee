/**
 * Ring arithmetic over R_q = Z_q[x]/(x^n + 1).
 *
 * ParamSet fixes the ring (n a power of two, q prime with q = 1 mod 2n)
 * together with the message scale t = floor(q/2), the Gaussian parameter
 * sigma, and the 2n-th root of unity psi used by the NTT backend.
 *
 * Coefficients are kept as canonical least residues in [0, q); the centered
 * representation appears only inside rounding and noise diagnostics.
 */

#ifndef PCP_RING_HPP
#define PCP_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace pcp {

/// Validated ring parameters. Immutable after construction via make_params().
struct ParamSet {
    uint32_t n = 0;       // ring dimension, power of 2
    uint32_t q = 0;       // prime modulus, q = 1 mod 2n
    uint32_t t = 0;       // message scale, floor(q/2)
    double sigma = 0.0;   // Gaussian parameter, coefficient units
    uint32_t psi = 0;     // smallest primitive 2n-th root of unity mod q
    uint32_t omega = 0;   // psi^2, primitive n-th root
    uint32_t n_inv = 0;   // n^{-1} mod q
};

/// Length-n coefficient vector over Z_q.
struct RingElement {
    std::vector<uint32_t> coeffs;

    bool operator==(const RingElement&) const = default;
};

/// Length-n vector over {0,1}; plaintexts and OT pads.
struct BinaryVector {
    std::vector<uint8_t> bits;

    bool operator==(const BinaryVector&) const = default;
};

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalar helpers, 64-bit intermediates so q up to 2^31 is safe.
inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t q) {
    uint32_t s = a + b;
    return s >= q ? s - q : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t q) {
    return a >= b ? a - b : a + q - b;
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t q) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q);
}

uint32_t pow_mod(uint32_t base, uint64_t exp, uint32_t q);

bool is_prime(uint32_t v);
bool is_power_of_two(uint32_t v);

/// Validates (n, q, sigma) and derives t, psi, omega, n_inv.
/// Throws ParamError on any violated precondition.
ParamSet make_params(uint32_t n, uint32_t q, double sigma);

/// Re-center a least residue to (-q/2, q/2].
int64_t center(uint32_t v, uint32_t q);

RingElement zero_element(const ParamSet& params);

/// x^k as a ring element (k < n).
RingElement monomial(const ParamSet& params, uint32_t k, uint32_t coeff = 1);

void check_element(const ParamSet& params, const RingElement& a);
void check_binary(const ParamSet& params, const BinaryVector& m);

RingElement add(const ParamSet& params, const RingElement& a, const RingElement& b);
RingElement sub(const ParamSet& params, const RingElement& a, const RingElement& b);

/// Coefficient i of the result is t * m_i mod q.
RingElement lift_binary(const ParamSet& params, const BinaryVector& m);

/// Nearest-binary rounding: bit_i = 1 iff v_i in [ceil(q/4), floor(3q/4)].
/// Equidistant coefficients round to 0.
BinaryVector round_to_binary(const ParamSet& params, const RingElement& v);

/// Reference negacyclic product: c_i = sum_{j+k=i mod n} sign(j,k) a_j b_k,
/// sign = +1 when j+k < n, -1 otherwise. The oracle every faster backend is
/// checked against.
RingElement schoolbook_mul(const ParamSet& params, const RingElement& a, const RingElement& b);

/// Max absolute centered coefficient.
uint32_t infinity_norm(const ParamSet& params, const RingElement& a);

BinaryVector xor_bits(const BinaryVector& a, const BinaryVector& b);
uint32_t hamming_weight(const BinaryVector& a);

/// Shipped parameter sets: "toy" (4, 17, 1.0), "n256" (256, 7681, 4.0),
/// "n512" (512, 12289, 4.0), "n1024" (1024, 12289, 3.0).
/// Throws ParamError on an unknown name.
ParamSet preset_params(std::string_view name);

} // namespace pcp

#endif // PCP_RING_HPP
