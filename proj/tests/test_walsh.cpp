#include "doctest.h"

#include <numeric>
#include <random>
#include <stdexcept>

#include "hbf/psap.hpp"
#include "hbf/walsh.hpp"

using namespace hbf;

namespace {

BooleanFunction random_function(const Field& f, std::mt19937& rng) {
    BooleanFunction b = zero_boolean(f);
    for (auto& v : b.table)
        v = static_cast<std::uint8_t>(rng() & 1u);
    return b;
}

} // namespace

TEST_CASE("extended transform of the zero function") {
    const Field f(4);
    const BooleanFunction z = zero_boolean(f);
    CHECK(extended_walsh(z, 0, 1) == 16);   // all summands +1
    CHECK(extended_walsh(z, 0, 7) == 16);
    for (Field::Elt lambda = 1; lambda < f.size(); ++lambda)
        CHECK(extended_walsh(z, lambda, 1) == 0);  // Tr(lambda x) is balanced
    CHECK_THROWS_AS(extended_walsh(z, 1, 3), std::invalid_argument);  // gcd(3,15) != 1
    CHECK_THROWS_AS(extended_walsh(z, 1, 0), std::invalid_argument);
}

TEST_CASE("full spectrum of the zero function and Parseval") {
    const Field f(4);
    const WalshSpectrum s = full_spectrum(zero_boolean(f), 1);
    CHECK(s.values[0] == 16);
    for (std::size_t i = 1; i < s.values.size(); ++i)
        CHECK(s.values[i] == 0);

    std::mt19937 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const BooleanFunction b = random_function(f, rng);
        CHECK(full_spectrum(b, 1).energy() == (std::uint64_t{1} << 8));  // 2^(2n)
    }
}

TEST_CASE("fast spectrum equals the definitional sum pointwise") {
    std::mt19937 rng(2);
    for (unsigned n : {4u, 6u}) {
        const Field f(n);
        for (int trial = 0; trial < 4; ++trial) {
            const BooleanFunction b = random_function(f, rng);
            for (std::uint32_t t : coprime_exponents(n)) {
                const WalshSpectrum s = full_spectrum(b, t);
                for (Field::Elt lambda = 0; lambda < f.size(); ++lambda)
                    REQUIRE(s.values[lambda] == extended_walsh(b, lambda, t));
            }
        }
    }
    // the spec'd spot check: GF(16), t = 7
    const Field f(4);
    const BooleanFunction b = random_function(f, rng);
    const WalshSpectrum s = full_spectrum(b, 7);
    for (Field::Elt lambda = 0; lambda < f.size(); ++lambda)
        CHECK(s.values[lambda] == extended_walsh(b, lambda, 7));
}

TEST_CASE("bentness") {
    const Field f(4);
    CHECK_FALSE(is_bent(zero_boolean(f)));

    // linear functions are never bent
    BooleanFunction lin = zero_boolean(f);
    for (std::size_t x = 0; x < f.size(); ++x)
        lin.table[x] = static_cast<std::uint8_t>(f.abs_trace(static_cast<Field::Elt>(x)));
    CHECK_FALSE(is_bent(lin));

    // a component of T_{u0} is bent (and more)
    const PsapContext ctx(f);
    const VectorialFunction T = t_construction(ctx, ctx.u0_from_exponent(1));
    CHECK(is_bent(component(T, 1)));

    const Field f3(3);
    CHECK_THROWS_AS(is_bent(zero_boolean(f3)), std::invalid_argument);
}

TEST_CASE("hyper-bent oracle on lifted g functions, m = 2, exhaustive") {
    const Field f(4);
    const UGroup U = make_ugroup(f);

    int hyperbent_count = 0;
    for (std::uint32_t code = 0; code < 32; ++code) {
        GFunction g{&U, 1, {}};
        int sum = 0;
        for (unsigned j = 0; j < 5; ++j) {
            g.values.push_back(code >> j & 1u);
            sum += (code >> j & 1u) ? -1 : 1;
        }
        const VectorialFunction F = lift_g_to_f(g);
        const bool hb = is_hyperbent_oracle(component(F, 1));
        CHECK(hb == (sum == 1));
        if (hb)
            ++hyperbent_count;
    }
    CHECK(hyperbent_count == 10);  // C(5,3) ways to place three zeros
}

TEST_CASE("hyper-bent spectra have the right sign split") {
    const Field f(4);
    const PsapContext ctx(f);
    for (std::uint64_t e = 1; e <= 4; ++e) {
        const VectorialFunction T = t_construction(ctx, ctx.u0_from_exponent(e));
        for (std::uint32_t v = 1; v < 4; ++v) {
            const WalshSpectrum s = full_spectrum(component(T, v), 1);
            int plus = 0;
            for (std::int64_t val : s.values) {
                REQUIRE((val == 4 || val == -4));
                if (val == 4)
                    ++plus;
            }
            CHECK((plus == 8 + 2 || plus == 8 - 2));  // 2^(n-1) +- 2^(n/2-1)
        }
    }
}

TEST_CASE("oracle guards") {
    const Field f3(3);
    CHECK_THROWS_AS(is_hyperbent_oracle(zero_boolean(f3)), std::invalid_argument);  // odd n
    const Field f(4);
    BooleanFunction junk{&f, std::vector<std::uint8_t>(5, 0)};
    CHECK_THROWS_AS(is_hyperbent_oracle(junk), std::invalid_argument);
}

TEST_CASE("oracle failure reports the smallest witness") {
    const Field f(4);
    HyperbentWitness w;
    CHECK_FALSE(is_hyperbent_oracle(zero_boolean(f), false, &w));
    CHECK(w.t == 1);
    CHECK(w.lambda == 0);
    CHECK(w.value == 16);
}

TEST_CASE("coset-reduced sweep matches the full oracle") {
    const Field f(4);
    const UGroup U = make_ugroup(f);
    std::mt19937 rng(3);

    // every lifted g (all 32) plus random tables
    for (std::uint32_t code = 0; code < 32; ++code) {
        GFunction g{&U, 1, {}};
        for (unsigned j = 0; j < 5; ++j)
            g.values.push_back(code >> j & 1u);
        const BooleanFunction b = component(lift_g_to_f(g), 1);
        CHECK(is_hyperbent_cosets(b) == is_hyperbent_oracle(b));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const BooleanFunction b = random_function(f, rng);
        CHECK(is_hyperbent_cosets(b) == is_hyperbent_oracle(b));
    }

    // coset leaders: for n = 4 the coprime exponents {1,2,4,8|7,14,13,11}
    const auto leaders = coset_leader_exponents(4);
    CHECK(leaders == std::vector<std::uint32_t>{1, 7});
}

TEST_CASE("worker count does not change verdicts") {
    const Field f(6);
    const PsapContext ctx(f);
    const BooleanFunction b = component(t_construction(ctx, ctx.u0_from_exponent(2)), 1);
    const unsigned saved = worker_count();
    set_worker_count(1);
    const bool v1 = is_hyperbent_oracle(b);
    set_worker_count(4);
    const bool v4 = is_hyperbent_oracle(b);
    set_worker_count(saved);
    CHECK(v1 == v4);
    CHECK(v1);
}

TEST_CASE("cost guard at n > 16 is overridable") {
    const Field f(18);
    const BooleanFunction z = zero_boolean(f);
    CHECK_THROWS_AS(is_hyperbent_oracle(z), std::invalid_argument);
    // with the override the sweep runs; the zero function fails instantly
    HyperbentWitness w;
    CHECK_FALSE(is_hyperbent_oracle(z, true, &w));
    CHECK(w.t == 1);
}
