#include <doctest.h>

#include "pcp/ring.hpp"
#include "pcp/sampler.hpp"
#include "test_util.hpp"

using namespace pcp;
using namespace pcp::test;

TEST_CASE("make_params derives the toy set") {
    ParamSet p = make_params(4, 17, 1.0);
    CHECK(p.t == 8);
    CHECK(p.psi == 2);
    CHECK(p.omega == 4);
    CHECK(p.n_inv == 13);
    CHECK(pow_mod(p.psi, 8, 17) == 1);
    CHECK(pow_mod(p.psi, 4, 17) == 16);
    CHECK(mul_mod(4, p.n_inv, 17) == 1);
}

TEST_CASE("make_params accepts the default sets") {
    ParamSet p = make_params(256, 7681, 4.0);
    CHECK(p.t == 3840);
    CHECK(pow_mod(p.psi, 256, 7681) == 7680);
    CHECK_NOTHROW(make_params(512, 12289, 4.0));
    CHECK_NOTHROW(make_params(1024, 12289, 3.0));
    CHECK_NOTHROW(preset_params("toy"));
    CHECK_THROWS_AS(preset_params("bogus"), ParamError);
}

TEST_CASE("make_params rejects bad inputs") {
    CHECK_THROWS_AS(make_params(4, 18, 1.0), ParamError);   // q not prime
    CHECK_THROWS_AS(make_params(6, 17, 1.0), ParamError);   // n not a power of 2
    CHECK_THROWS_AS(make_params(4, 19, 1.0), ParamError);   // q != 1 mod 2n
    CHECK_THROWS_AS(make_params(4, 17, 0.0), ParamError);   // sigma <= 0
    CHECK_THROWS_AS(make_params(4, 17, -1.0), ParamError);
    CHECK_THROWS_AS(make_params(1, 17, 1.0), ParamError);   // n < 2
}

TEST_CASE("add and sub examples") {
    ParamSet p = make_params(4, 17, 1.0);
    CHECK(add(p, from_coeffs({0, 0, 0, 0}), from_coeffs({1, 2, 3, 4})) ==
          from_coeffs({1, 2, 3, 4}));
    CHECK(add(p, from_coeffs({16, 0, 0, 0}), from_coeffs({1, 0, 0, 0})) ==
          from_coeffs({0, 0, 0, 0}));
    CHECK(add(p, from_coeffs({5, 6, 7, 8}), from_coeffs({13, 12, 11, 10})) ==
          from_coeffs({1, 1, 1, 1}));

    RingElement a = from_coeffs({5, 6, 7, 8});
    CHECK(sub(p, a, a) == zero_element(p));
    CHECK(sub(p, from_coeffs({0, 0, 0, 0}), from_coeffs({1, 0, 0, 0})) ==
          from_coeffs({16, 0, 0, 0}));
    CHECK(sub(p, from_coeffs({5, 6, 7, 8}), from_coeffs({13, 12, 11, 10})) ==
          from_coeffs({9, 11, 13, 15}));

    CHECK_THROWS_AS(add(p, from_coeffs({1, 2}), from_coeffs({1, 2, 3, 4})),
                    std::invalid_argument);
}

TEST_CASE("lift_binary scales bits by t") {
    ParamSet p = make_params(4, 17, 1.0);
    CHECK(lift_binary(p, from_bits({0, 0, 0, 0})) == zero_element(p));
    CHECK(lift_binary(p, from_bits({1, 1, 1, 1})) == from_coeffs({8, 8, 8, 8}));
    CHECK(lift_binary(p, from_bits({1, 0, 1, 0})) == from_coeffs({8, 0, 8, 0}));
}

TEST_CASE("round_to_binary boundary behavior") {
    ParamSet p = make_params(4, 17, 1.0);
    CHECK(round_to_binary(p, from_coeffs({8, 0, 8, 0})) == from_bits({1, 0, 1, 0}));
    CHECK(round_to_binary(p, zero_element(p)) == from_bits({0, 0, 0, 0}));
    // |12-8|=4 < |12-17|=5 so 12 rounds to 1; |13-17|=4 < |13-8|=5 so 13 to 0.
    CHECK(round_to_binary(p, from_coeffs({12, 13, 0, 0})) == from_bits({1, 0, 0, 0}));
}

TEST_CASE("schoolbook_mul examples") {
    ParamSet p = make_params(4, 17, 1.0);
    Drbg rng(make_seed(1));
    RingElement a = random_element(p, rng);
    CHECK(schoolbook_mul(p, a, monomial(p, 0)) == a);
    CHECK(schoolbook_mul(p, monomial(p, 1), monomial(p, 3)) == from_coeffs({16, 0, 0, 0}));
    CHECK(schoolbook_mul(p, from_coeffs({1, 1, 0, 0}), from_coeffs({1, 1, 0, 0})) ==
          from_coeffs({1, 2, 1, 0}));
}

TEST_CASE("negacyclic law: x^(n-1) * x = -1") {
    for (const char* name : {"toy", "n256"}) {
        ParamSet p = preset_params(name);
        RingElement prod = schoolbook_mul(p, monomial(p, p.n - 1), monomial(p, 1));
        RingElement expected = monomial(p, 0, p.q - 1);
        CHECK(prod == expected);
    }
}

TEST_CASE("ring axioms on random triples") {
    for (const char* name : {"toy", "n256"}) {
        ParamSet p = preset_params(name);
        const int samples = (p.n == 4) ? 1000 : 50;
        Drbg rng(make_seed(2));
        for (int i = 0; i < samples; ++i) {
            RingElement a = random_element(p, rng);
            RingElement b = random_element(p, rng);
            RingElement c = random_element(p, rng);
            REQUIRE(add(p, a, b) == add(p, b, a));
            REQUIRE(add(p, add(p, a, b), c) == add(p, a, add(p, b, c)));
            REQUIRE(schoolbook_mul(p, a, b) == schoolbook_mul(p, b, a));
            REQUIRE(schoolbook_mul(p, a, add(p, b, c)) ==
                    add(p, schoolbook_mul(p, a, b), schoolbook_mul(p, a, c)));
            REQUIRE(add(p, sub(p, a, b), b) == a);
        }
    }
}

TEST_CASE("closure: every output coefficient stays in [0, q)") {
    ParamSet p = preset_params("toy");
    Drbg rng(make_seed(3));
    for (int i = 0; i < 200; ++i) {
        RingElement a = random_element(p, rng);
        RingElement b = random_element(p, rng);
        for (auto out : {add(p, a, b), sub(p, a, b), schoolbook_mul(p, a, b)}) {
            for (uint32_t c : out.coeffs) REQUIRE(c < p.q);
        }
    }
}

TEST_CASE("round_to_binary inverts lift_binary") {
    ParamSet toy = preset_params("toy");
    // Exhaustive for n=4.
    for (uint32_t pattern = 0; pattern < 16; ++pattern) {
        BinaryVector m;
        for (int i = 0; i < 4; ++i)
            m.bits.push_back(static_cast<uint8_t>((pattern >> i) & 1));
        REQUIRE(round_to_binary(toy, lift_binary(toy, m)) == m);
    }

    ParamSet big = preset_params("n256");
    Drbg rng(make_seed(4));
    for (int i = 0; i < 1000; ++i) {
        BinaryVector m = sample_binary(big, rng);
        REQUIRE(round_to_binary(big, lift_binary(big, m)) == m);
    }
}

TEST_CASE("rounding absorbs noise below floor(q/4) - 1") {
    ParamSet p = preset_params("n256");
    const int64_t bound = static_cast<int64_t>(p.q / 4) - 1;
    Drbg rng(make_seed(5));
    for (int trial = 0; trial < 200; ++trial) {
        BinaryVector m = sample_binary(p, rng);
        RingElement e;
        e.coeffs.resize(p.n);
        for (uint32_t i = 0; i < p.n; ++i) {
            int64_t v = static_cast<int64_t>(rng.next_u32() % (2 * bound - 1)) - (bound - 1);
            e.coeffs[i] = v >= 0 ? static_cast<uint32_t>(v)
                                 : p.q - static_cast<uint32_t>(-v);
        }
        REQUIRE(round_to_binary(p, add(p, lift_binary(p, m), e)) == m);
    }
}

TEST_CASE("infinity_norm uses the centered representation") {
    ParamSet p = preset_params("toy");
    CHECK(infinity_norm(p, from_coeffs({16, 0, 0, 0})) == 1);  // -1 mod 17
    CHECK(infinity_norm(p, from_coeffs({8, 0, 0, 0})) == 8);
    CHECK(infinity_norm(p, zero_element(p)) == 0);
}
