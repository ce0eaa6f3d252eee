/**
 * Interchangeable negacyclic multiplication backends.
 *
 * Three backends, all value-exact against schoolbook_mul:
 *   - schoolbook: n^2 reference path
 *   - ntt: negative wrapped convolution, psi pre-weighting plus a length-n
 *     butterfly transform, O(n log n) modular multiplications
 *   - parm: the full reduced-product term table is precomputed once; each
 *     output coefficient is then an independent n-term accumulation
 *     (n^2 multiplications total, every coefficient computable in parallel)
 *
 * An OpCounter can be attached to any call to get exact modular
 * multiplication / addition counts.
 */

#ifndef PCP_MULTIPLIER_HPP
#define PCP_MULTIPLIER_HPP

#include <cstdint>
#include <string_view>
#include <optional>
#include <vector>

#include "pcp/ring.hpp"

namespace pcp {

enum class Backend { Schoolbook, Ntt, Parm };

std::string_view backend_name(Backend b);
std::optional<Backend> backend_from_name(std::string_view name);

/// Exact operation counts for one multiplication call.
struct OpCounter {
    uint64_t modmul = 0;
    uint64_t modadd = 0;

    void reset() { modmul = 0; modadd = 0; }
};

/// Precomputed NTT constants; derived from the ParamSet alone.
struct NttTables {
    uint32_t n = 0;
    uint32_t q = 0;
    uint32_t n_inv = 0;
    std::vector<uint32_t> psi_powers;      // psi^i, natural order
    std::vector<uint32_t> inv_psi_powers;  // psi^{-i}
    std::vector<std::vector<uint32_t>> fwd_twiddles;  // per butterfly stage
    std::vector<std::vector<uint32_t>> inv_twiddles;
    std::vector<uint32_t> bitrev;          // index permutation
};

/// One term of a precomputed product coefficient: sign * a[j] * b[k].
struct ParmTerm {
    uint32_t j = 0;
    uint32_t k = 0;
    int8_t sign = 1;  // +1 when j+k < n, -1 after the x^n = -1 wrap
};

/// The reduced-product formulas for all n output coefficients, built once
/// per ParamSet. terms[i] holds exactly n (j, k, sign) triples.
struct ParmTable {
    uint32_t n = 0;
    std::vector<std::vector<ParmTerm>> terms;
};

NttTables ntt_precompute(const ParamSet& params);
ParmTable parm_precompute(const ParamSet& params);

/// a_hat[i] = sum_j a[j] * psi^j * omega^(i*j) mod q, natural index order.
RingElement ntt_forward(const ParamSet& params, const RingElement& a,
                        const NttTables& tables, OpCounter* ctr = nullptr);

/// Exact inverse of ntt_forward (n_inv scaling and inverse psi weighting).
RingElement ntt_inverse(const ParamSet& params, const RingElement& ahat,
                        const NttTables& tables, OpCounter* ctr = nullptr);

RingElement ntt_mul(const ParamSet& params, const RingElement& a, const RingElement& b,
                    const NttTables& tables, OpCounter* ctr = nullptr);

RingElement parm_mul(const ParamSet& params, const RingElement& a, const RingElement& b,
                     const ParmTable& table, OpCounter* ctr = nullptr);

/// One backend bound to its precomputed tables. Immutable and shareable.
class Multiplier {
public:
    Multiplier(const ParamSet& params, Backend backend);

    RingElement mul(const RingElement& a, const RingElement& b,
                    OpCounter* ctr = nullptr) const;

    Backend backend() const { return backend_; }
    const ParamSet& params() const { return params_; }

private:
    ParamSet params_;
    Backend backend_;
    std::optional<NttTables> ntt_;
    std::optional<ParmTable> parm_;
};

/// Exact modular-multiplication count incurred by one product.
OpCounter count_ops(const Multiplier& m, const RingElement& a, const RingElement& b);

/// Upper bound asserted for the NTT backend's multiplication count.
inline uint64_t ntt_modmul_bound(uint32_t n) {
    uint32_t log2n = 0;
    while ((1u << log2n) < n) ++log2n;
    return 4ull * n * log2n + 4ull * n;
}

} // namespace pcp

#endif // PCP_MULTIPLIER_HPP
