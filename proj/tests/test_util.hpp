#pragma once

#include <cstdint>

#include "pcp/ring.hpp"
#include "pcp/sampler.hpp"

namespace pcp::test {

inline Seed make_seed(uint8_t fill) {
    Seed s{};
    s.fill(fill);
    return s;
}

inline RingElement from_coeffs(std::vector<uint32_t> c) { return RingElement{std::move(c)}; }

inline BinaryVector from_bits(std::vector<uint8_t> b) { return BinaryVector{std::move(b)}; }

inline RingElement random_element(const ParamSet& p, Drbg& rng) {
    return sample_uniform(p, rng);
}

} // namespace pcp::test
