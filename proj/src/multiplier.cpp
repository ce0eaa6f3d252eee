#include "pcp/multiplier.hpp"

namespace pcp {

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Schoolbook: return "schoolbook";
        case Backend::Ntt: return "ntt";
        case Backend::Parm: return "parm";
    }
    return "?";
}

std::optional<Backend> backend_from_name(std::string_view name) {
    if (name == "schoolbook") return Backend::Schoolbook;
    if (name == "ntt") return Backend::Ntt;
    if (name == "parm") return Backend::Parm;
    return std::nullopt;
}

namespace {

uint32_t log2_exact(uint32_t n) {
    uint32_t l = 0;
    while ((1u << l) < n) ++l;
    return l;
}

uint32_t bit_reverse(uint32_t x, uint32_t bits) {
    uint32_t r = 0;
    for (uint32_t i = 0; i < bits; ++i) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

// In-place DFT with the given per-stage twiddles; input must already be in
// bit-reversed order. Counts every butterfly multiplication.
void butterfly(std::vector<uint32_t>& u, uint32_t q,
               const std::vector<std::vector<uint32_t>>& twiddles, OpCounter* ctr) {
    const uint32_t n = static_cast<uint32_t>(u.size());
    uint32_t stage = 0;
    for (uint32_t len = 2; len <= n; len <<= 1, ++stage) {
        const auto& tw = twiddles[stage];
        const uint32_t half = len / 2;
        for (uint32_t start = 0; start < n; start += len) {
            for (uint32_t j = 0; j < half; ++j) {
                uint32_t x = u[start + j];
                uint32_t y = mul_mod(u[start + j + half], tw[j], q);
                u[start + j] = add_mod(x, y, q);
                u[start + j + half] = sub_mod(x, y, q);
                if (ctr) {
                    ctr->modmul += 1;
                    ctr->modadd += 2;
                }
            }
        }
    }
}

} // namespace

NttTables ntt_precompute(const ParamSet& params) {
    NttTables t;
    t.n = params.n;
    t.q = params.q;
    t.n_inv = params.n_inv;

    const uint32_t n = params.n;
    const uint32_t q = params.q;
    const uint32_t psi_inv = pow_mod(params.psi, q - 2, q);

    t.psi_powers.resize(n);
    t.inv_psi_powers.resize(n);
    t.psi_powers[0] = 1;
    t.inv_psi_powers[0] = 1;
    for (uint32_t i = 1; i < n; ++i) {
        t.psi_powers[i] = mul_mod(t.psi_powers[i - 1], params.psi, q);
        t.inv_psi_powers[i] = mul_mod(t.inv_psi_powers[i - 1], psi_inv, q);
    }

    const uint32_t log2n = log2_exact(n);
    t.bitrev.resize(n);
    for (uint32_t i = 0; i < n; ++i) t.bitrev[i] = bit_reverse(i, log2n);

    const uint32_t omega_inv = pow_mod(params.omega, q - 2, q);
    t.fwd_twiddles.resize(log2n);
    t.inv_twiddles.resize(log2n);
    uint32_t stage = 0;
    for (uint32_t len = 2; len <= n; len <<= 1, ++stage) {
        const uint32_t step = n / len;
        const uint32_t wf = pow_mod(params.omega, step, q);
        const uint32_t wi = pow_mod(omega_inv, step, q);
        auto& fwd = t.fwd_twiddles[stage];
        auto& inv = t.inv_twiddles[stage];
        fwd.resize(len / 2);
        inv.resize(len / 2);
        fwd[0] = 1;
        inv[0] = 1;
        for (uint32_t j = 1; j < len / 2; ++j) {
            fwd[j] = mul_mod(fwd[j - 1], wf, q);
            inv[j] = mul_mod(inv[j - 1], wi, q);
        }
    }
    return t;
}

RingElement ntt_forward(const ParamSet& params, const RingElement& a,
                        const NttTables& tables, OpCounter* ctr) {
    check_element(params, a);
    const uint32_t n = params.n;
    const uint32_t q = params.q;

    // psi pre-weighting turns the plain length-n DFT into the negacyclic one.
    std::vector<uint32_t> u(n);
    for (uint32_t i = 0; i < n; ++i) {
        u[i] = mul_mod(a.coeffs[tables.bitrev[i]], tables.psi_powers[tables.bitrev[i]], q);
        if (ctr) ctr->modmul += 1;
    }
    butterfly(u, q, tables.fwd_twiddles, ctr);
    return RingElement{std::move(u)};
}

RingElement ntt_inverse(const ParamSet& params, const RingElement& ahat,
                        const NttTables& tables, OpCounter* ctr) {
    check_element(params, ahat);
    const uint32_t n = params.n;
    const uint32_t q = params.q;

    std::vector<uint32_t> u(n);
    for (uint32_t i = 0; i < n; ++i) u[i] = ahat.coeffs[tables.bitrev[i]];
    butterfly(u, q, tables.inv_twiddles, ctr);

    for (uint32_t i = 0; i < n; ++i) {
        u[i] = mul_mod(u[i], tables.n_inv, q);
        u[i] = mul_mod(u[i], tables.inv_psi_powers[i], q);
        if (ctr) ctr->modmul += 2;
    }
    return RingElement{std::move(u)};
}

RingElement ntt_mul(const ParamSet& params, const RingElement& a, const RingElement& b,
                    const NttTables& tables, OpCounter* ctr) {
    RingElement ahat = ntt_forward(params, a, tables, ctr);
    RingElement bhat = ntt_forward(params, b, tables, ctr);
    for (uint32_t i = 0; i < params.n; ++i) {
        ahat.coeffs[i] = mul_mod(ahat.coeffs[i], bhat.coeffs[i], params.q);
        if (ctr) ctr->modmul += 1;
    }
    return ntt_inverse(params, ahat, tables, ctr);
}

ParmTable parm_precompute(const ParamSet& params) {
    ParmTable t;
    t.n = params.n;
    t.terms.resize(params.n);
    for (uint32_t i = 0; i < params.n; ++i) {
        auto& row = t.terms[i];
        row.reserve(params.n);
        for (uint32_t j = 0; j < params.n; ++j) {
            uint32_t k = (i >= j) ? i - j : i + params.n - j;
            int8_t sign = (j + k < params.n) ? int8_t{1} : int8_t{-1};
            row.push_back(ParmTerm{j, k, sign});
        }
    }
    return t;
}

RingElement parm_mul(const ParamSet& params, const RingElement& a, const RingElement& b,
                     const ParmTable& table, OpCounter* ctr) {
    check_element(params, a);
    check_element(params, b);
    if (table.n != params.n) throw std::invalid_argument("parm table dimension mismatch");
    const uint32_t q = params.q;
    RingElement c;
    c.coeffs.resize(params.n);
    // Rows are independent; each output coefficient touches only its own
    // accumulator.
    for (uint32_t i = 0; i < params.n; ++i) {
        uint32_t acc = 0;
        for (const ParmTerm& term : table.terms[i]) {
            uint32_t prod = mul_mod(a.coeffs[term.j], b.coeffs[term.k], q);
            acc = (term.sign > 0) ? add_mod(acc, prod, q) : sub_mod(acc, prod, q);
        }
        if (ctr) {
            ctr->modmul += params.n;
            ctr->modadd += params.n;
        }
        c.coeffs[i] = acc;
    }
    return c;
}

Multiplier::Multiplier(const ParamSet& params, Backend backend)
    : params_(params), backend_(backend) {
    if (backend == Backend::Ntt) ntt_ = ntt_precompute(params);
    if (backend == Backend::Parm) parm_ = parm_precompute(params);
}

RingElement Multiplier::mul(const RingElement& a, const RingElement& b, OpCounter* ctr) const {
    switch (backend_) {
        case Backend::Ntt:
            return ntt_mul(params_, a, b, *ntt_, ctr);
        case Backend::Parm:
            return parm_mul(params_, a, b, *parm_, ctr);
        case Backend::Schoolbook:
        default: {
            RingElement c = schoolbook_mul(params_, a, b);
            if (ctr) {
                ctr->modmul += static_cast<uint64_t>(params_.n) * params_.n;
                ctr->modadd += static_cast<uint64_t>(params_.n) * params_.n;
            }
            return c;
        }
    }
}

OpCounter count_ops(const Multiplier& m, const RingElement& a, const RingElement& b) {
    OpCounter ctr;
    m.mul(a, b, &ctr);
    return ctr;
}

} // namespace pcp
