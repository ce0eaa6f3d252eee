#include "pcp/ring.hpp"

#include <string>

namespace pcp {

uint32_t pow_mod(uint32_t base, uint64_t exp, uint32_t q) {
    uint64_t result = 1;
    uint64_t b = base % q;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % q;
        b = (b * b) % q;
        exp >>= 1;
    }
    return static_cast<uint32_t>(result);
}

bool is_prime(uint32_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

bool is_power_of_two(uint32_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

ParamSet make_params(uint32_t n, uint32_t q, double sigma) {
    if (!is_power_of_two(n) || n < 2)
        throw ParamError("n must be a power of 2 and >= 2, got " + std::to_string(n));
    if (!is_prime(q))
        throw ParamError("q must be prime, got " + std::to_string(q));
    if (q % (2ull * n) != 1)
        throw ParamError("q must be 1 mod 2n, got q=" + std::to_string(q) +
                         " n=" + std::to_string(n));
    if (!(sigma > 0.0))
        throw ParamError("sigma must be positive");

    ParamSet p;
    p.n = n;
    p.q = q;
    p.t = q / 2;
    p.sigma = sigma;

    // Smallest primitive 2n-th root: psi^n = -1 forces order exactly 2n
    // when n is a power of 2.
    p.psi = 0;
    for (uint32_t c = 2; c < q; ++c) {
        if (pow_mod(c, n, q) == q - 1) {
            p.psi = c;
            break;
        }
    }
    if (p.psi == 0)
        throw ParamError("no primitive 2n-th root of unity mod q");  // unreachable for valid q

    p.omega = mul_mod(p.psi, p.psi, q);
    p.n_inv = pow_mod(n % q, q - 2, q);
    return p;
}

int64_t center(uint32_t v, uint32_t q) {
    int64_t x = v;
    if (x > q / 2) x -= q;
    return x;
}

RingElement zero_element(const ParamSet& params) {
    return RingElement{std::vector<uint32_t>(params.n, 0)};
}

RingElement monomial(const ParamSet& params, uint32_t k, uint32_t coeff) {
    RingElement r = zero_element(params);
    r.coeffs.at(k) = coeff % params.q;
    return r;
}

void check_element(const ParamSet& params, const RingElement& a) {
    if (a.coeffs.size() != params.n)
        throw std::invalid_argument("ring element dimension mismatch");
    for (uint32_t c : a.coeffs) {
        if (c >= params.q) throw std::invalid_argument("coefficient out of range");
    }
}

void check_binary(const ParamSet& params, const BinaryVector& m) {
    if (m.bits.size() != params.n)
        throw std::invalid_argument("binary vector dimension mismatch");
    for (uint8_t b : m.bits) {
        if (b > 1) throw std::invalid_argument("binary vector entry not a bit");
    }
}

RingElement add(const ParamSet& params, const RingElement& a, const RingElement& b) {
    check_element(params, a);
    check_element(params, b);
    RingElement c;
    c.coeffs.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i)
        c.coeffs[i] = add_mod(a.coeffs[i], b.coeffs[i], params.q);
    return c;
}

RingElement sub(const ParamSet& params, const RingElement& a, const RingElement& b) {
    check_element(params, a);
    check_element(params, b);
    RingElement c;
    c.coeffs.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i)
        c.coeffs[i] = sub_mod(a.coeffs[i], b.coeffs[i], params.q);
    return c;
}

RingElement lift_binary(const ParamSet& params, const BinaryVector& m) {
    check_binary(params, m);
    RingElement r;
    r.coeffs.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i)
        r.coeffs[i] = m.bits[i] ? params.t : 0;
    return r;
}

BinaryVector round_to_binary(const ParamSet& params, const RingElement& v) {
    check_element(params, v);
    const uint32_t lo = (params.q + 3) / 4;      // ceil(q/4)
    const uint32_t hi = (3ull * params.q) / 4;   // floor(3q/4)
    BinaryVector m;
    m.bits.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i)
        m.bits[i] = (v.coeffs[i] >= lo && v.coeffs[i] <= hi) ? 1 : 0;
    return m;
}

RingElement schoolbook_mul(const ParamSet& params, const RingElement& a, const RingElement& b) {
    check_element(params, a);
    check_element(params, b);
    const uint32_t n = params.n;
    const uint32_t q = params.q;
    RingElement c = zero_element(params);
    for (uint32_t j = 0; j < n; ++j) {
        for (uint32_t k = 0; k < n; ++k) {
            uint32_t prod = mul_mod(a.coeffs[j], b.coeffs[k], q);
            uint32_t i = j + k;
            if (i < n) {
                c.coeffs[i] = add_mod(c.coeffs[i], prod, q);
            } else {
                c.coeffs[i - n] = sub_mod(c.coeffs[i - n], prod, q);  // x^n = -1
            }
        }
    }
    return c;
}

uint32_t infinity_norm(const ParamSet& params, const RingElement& a) {
    check_element(params, a);
    int64_t best = 0;
    for (uint32_t c : a.coeffs) {
        int64_t v = center(c, params.q);
        if (v < 0) v = -v;
        if (v > best) best = v;
    }
    return static_cast<uint32_t>(best);
}

BinaryVector xor_bits(const BinaryVector& a, const BinaryVector& b) {
    if (a.bits.size() != b.bits.size())
        throw std::invalid_argument("binary vector length mismatch");
    BinaryVector c;
    c.bits.resize(a.bits.size());
    for (size_t i = 0; i < a.bits.size(); ++i)
        c.bits[i] = a.bits[i] ^ b.bits[i];
    return c;
}

uint32_t hamming_weight(const BinaryVector& a) {
    uint32_t w = 0;
    for (uint8_t b : a.bits) w += b;
    return w;
}

ParamSet preset_params(std::string_view name) {
    if (name == "toy") return make_params(4, 17, 1.0);
    if (name == "n256") return make_params(256, 7681, 4.0);
    if (name == "n512") return make_params(512, 12289, 4.0);
    if (name == "n1024") return make_params(1024, 12289, 3.0);
    throw ParamError("unknown parameter set: " + std::string(name));
}

} // namespace pcp
