#include <doctest.h>

#include <cmath>

#include "pcp/sampler.hpp"
#include "test_util.hpp"

using namespace pcp;
using namespace pcp::test;

TEST_CASE("seed hex round trip and validation") {
    std::string hex =
        "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f";
    Seed s = seed_from_hex(hex);
    CHECK(s[0] == 0x00);
    CHECK(s[31] == 0x1f);
    CHECK(seed_to_hex(s) == hex);
    CHECK_THROWS_AS(seed_from_hex("abcd"), std::invalid_argument);
    CHECK_THROWS_AS(seed_from_hex(std::string(64, 'g')), std::invalid_argument);
}

TEST_CASE("drbg determinism and stream independence") {
    ParamSet p = preset_params("n256");
    GaussianTable table(p.sigma);

    Drbg a(make_seed(7));
    Drbg b(make_seed(7));
    CHECK(sample_gaussian(p, table, a) == sample_gaussian(p, table, b));
    CHECK(sample_uniform(p, a) == sample_uniform(p, b));
    CHECK(sample_binary(p, a) == sample_binary(p, b));

    Drbg c(make_seed(8));
    Drbg d(make_seed(9));
    CHECK(sample_uniform(p, c) != sample_uniform(p, d));
}

TEST_CASE("gaussian table shape") {
    GaussianTable table(4.0);
    CHECK(table.tail() == 24);
    const auto& cdf = table.cdf();
    for (size_t i = 1; i < cdf.size(); ++i) REQUIRE(cdf[i] >= cdf[i - 1]);
    CHECK(cdf.back() == (uint64_t{1} << 63));
    CHECK(std::abs(table.mean()) < 1e-9);
    CHECK(table.variance() == doctest::Approx(16.0).epsilon(0.01));
}

TEST_CASE("tiny sigma collapses to a point mass") {
    ParamSet p = make_params(256, 7681, 1e-6);
    GaussianTable table(p.sigma);
    Drbg rng(make_seed(20));
    CHECK(sample_gaussian(p, table, rng) == zero_element(p));
}

TEST_CASE("gaussian support stays inside the 6 sigma tail") {
    ParamSet p = preset_params("n256");
    GaussianTable table(p.sigma);
    const int64_t tail = table.tail();
    Drbg rng(make_seed(21));
    for (int trial = 0; trial < 100; ++trial) {
        RingElement e = sample_gaussian(p, table, rng);
        for (uint32_t c : e.coeffs) {
            int64_t v = center(c, p.q);
            REQUIRE(v >= -tail);
            REQUIRE(v <= tail);
        }
    }
}

TEST_CASE("gaussian empirical moments match the table") {
    ParamSet p = preset_params("n256");
    GaussianTable table(p.sigma);
    Drbg rng(make_seed(22));
    const size_t draws = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (size_t i = 0; i < draws / p.n; ++i) {
        RingElement e = sample_gaussian(p, table, rng);
        for (uint32_t c : e.coeffs) {
            double v = static_cast<double>(center(c, p.q));
            sum += v;
            sumsq += v * v;
        }
    }
    const double count = static_cast<double>((draws / p.n) * p.n);
    double mean = sum / count;
    double var = sumsq / count - mean * mean;
    CHECK(std::abs(mean - table.mean()) < 0.1);
    CHECK(var == doctest::Approx(table.variance()).epsilon(0.10));
}

TEST_CASE("uniform sampling is unbiased") {
    ParamSet p = preset_params("n256");
    Drbg rng(make_seed(23));

    // Chi-square over 16 equal buckets, df=15; 37.697 is the 0.001 cut.
    const size_t draws = 100000;
    std::array<uint64_t, 16> buckets{};
    size_t seen = 0;
    while (seen < draws) {
        RingElement a = sample_uniform(p, rng);
        for (uint32_t c : a.coeffs) {
            REQUIRE(c < p.q);
            buckets[static_cast<size_t>((static_cast<uint64_t>(c) * 16) / p.q)] += 1;
        }
        seen += p.n;
    }
    const double expected = static_cast<double>(seen) / 16.0;
    double chi2 = 0.0;
    for (uint64_t b : buckets) {
        double d = static_cast<double>(b) - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 37.697);
}

TEST_CASE("binary sampling is fair") {
    ParamSet p = preset_params("n256");
    Drbg rng(make_seed(24));
    uint64_t ones = 0;
    size_t total = 0;
    while (total < 100000) {
        BinaryVector m = sample_binary(p, rng);
        REQUIRE(m.bits.size() == p.n);
        ones += hamming_weight(m);
        total += p.n;
    }
    double mean = static_cast<double>(ones) / static_cast<double>(total);
    CHECK(mean > 0.49);
    CHECK(mean < 0.51);
}
