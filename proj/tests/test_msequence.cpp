#include "doctest.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "hbf/msequence.hpp"
#include "hbf/walsh.hpp"

using namespace hbf;

namespace {

// independent route: generate the two m-sequences bit by bit and correlate
// them as shifted streams
std::int64_t sequence_domain_crosscorr(const Field& fm, std::uint64_t d, std::uint32_t t) {
    const std::uint32_t period = fm.order();
    std::vector<int> a(period), b(period);
    for (std::uint32_t i = 0; i < period; ++i) {
        a[i] = fm.abs_trace(fm.pow_gamma(i)) ? -1 : 1;
        b[i] = fm.abs_trace(fm.pow_gamma(i * d % period)) ? -1 : 1;
    }
    std::int64_t sum = 0;
    for (std::uint32_t i = 0; i < period; ++i)
        sum += a[(t + i) % period] * b[i];
    return sum;
}

} // namespace

TEST_CASE("crosscorrelation basics at d = 1") {
    for (unsigned m : {3u, 4u, 5u}) {
        const Field fm(m);
        CHECK(crosscorrelation(fm, 1, 0) == fm.order());  // in-phase autocorrelation
        for (std::uint32_t t = 1; t < fm.order(); ++t)
            CHECK(crosscorrelation(fm, 1, t) == -1);

        const CrosscorrSpectrum s = crosscorr_spectrum(fm, 1);
        CHECK(s.distinct_values() == 2);
        CHECK(s.histogram.at(fm.order()) == 1);
        CHECK(s.histogram.at(-1) == static_cast<std::uint64_t>(fm.order() - 1));
    }
}

TEST_CASE("field sum equals the shifted-stream correlation") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        const Field fm(m);
        for (std::uint64_t d = 1; d < fm.order(); ++d) {
            if (std::gcd(d, static_cast<std::uint64_t>(fm.order())) != 1)
                continue;
            for (std::uint32_t t = 0; t < fm.order(); ++t)
                REQUIRE(crosscorrelation(fm, d, t) == sequence_domain_crosscorr(fm, d, t));
        }
    }
}

TEST_CASE("gcd precondition") {
    const Field f3(3);
    CHECK_THROWS_AS(crosscorrelation(f3, 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(crosscorr_spectrum(f3, 0), std::invalid_argument);
}

TEST_CASE("Gold decimation at m = 3 is three-valued with -1") {
    const Field f3(3);
    const CrosscorrSpectrum s = crosscorr_spectrum(f3, 3);
    CHECK(s.three_valued());
    CHECK(s.contains(-1));
    std::uint64_t total = 0;
    for (auto& [v, c] : s.histogram)
        total += c;
    CHECK(total == 7);
}

TEST_CASE("Kasami-style decimation at m = 5") {
    const Field f5(5);
    const CrosscorrSpectrum s = crosscorr_spectrum(f5, 13);  // 2^4 - 2^2 + 1
    CHECK(s.three_valued());
    CHECK(s.contains(-1));
}

TEST_CASE("spectrum conservation: sum of (C_d(t) + 1) = 2^m") {
    for (unsigned m = 3; m <= 8; ++m) {
        const Field fm(m);
        for (const DecimationEntry& e : known_decimations(m)) {
            if (!e.included)
                continue;
            const CrosscorrSpectrum s = crosscorr_spectrum(fm, e.d);
            std::int64_t total = 0;
            for (auto& [v, c] : s.histogram)
                total += (v + 1) * static_cast<std::int64_t>(c);
            CHECK(total == (1 << m));
        }
        // and for the trivial control
        const CrosscorrSpectrum s1 = crosscorr_spectrum(fm, 1);
        std::int64_t total = 0;
        for (auto& [v, c] : s1.histogram)
            total += (v + 1) * static_cast<std::int64_t>(c);
        CHECK(total == (1 << m));
    }
}

TEST_CASE("catalogue instantiation") {
    // m = 2: both Cusick-Dobbertin entries reduce to the trivial class
    for (const DecimationEntry& e : known_decimations(2))
        CHECK_FALSE(e.included);

    // m = 3: Gold k=1 present with d = 3, CCD gives d = 5, all included
    const auto m3 = known_decimations(3);
    bool gold3 = false, ccd5 = false;
    for (const auto& e : m3) {
        CHECK(e.included);
        if (e.family == DecimationFamily::gold && e.d == 3)
            gold3 = true;
        if (e.family == DecimationFamily::canteaut_charpin_dobbertin)
            ccd5 = e.d == 5;
    }
    CHECK(gold3);
    CHECK(ccd5);

    // m = 4 and m = 8: no family condition is met
    CHECK(known_decimations(4).empty());
    CHECK(known_decimations(8).empty());

    // m = 6 (2 mod 4): the quoted Cusick-Dobbertin value 2^3 + 2^2 + 1 = 13
    bool cd13 = false;
    for (const auto& e : known_decimations(6))
        if (e.family == DecimationFamily::cusick_dobbertin_a) {
            CHECK(e.d == 13);
            cd13 = true;
        }
    CHECK(cd13);

    CHECK_THROWS_AS(known_decimations(1), std::invalid_argument);
}

TEST_CASE("every included catalogue entry is three-valued with -1, m <= 8") {
    for (unsigned m = 2; m <= 8; ++m) {
        if (known_decimations(m).empty())
            continue;
        const Field fm(m);
        for (const DecimationEntry& e : known_decimations(m)) {
            if (!e.included)
                continue;
            const CrosscorrSpectrum s = crosscorr_spectrum(fm, e.d);
            REQUIRE(s.three_valued());
            REQUIRE(s.contains(-1));
        }
    }
}

TEST_CASE("spectra of d and 2d agree as multisets") {
    for (unsigned m = 3; m <= 6; ++m) {
        const Field fm(m);
        for (std::uint64_t d = 1; d < fm.order(); ++d) {
            if (std::gcd(d, static_cast<std::uint64_t>(fm.order())) != 1)
                continue;
            const CrosscorrSpectrum a = crosscorr_spectrum(fm, d);
            const CrosscorrSpectrum b = crosscorr_spectrum(fm, 2 * d % fm.order());
            CHECK(a.histogram == b.histogram);
        }
    }
}

TEST_CASE("corollary-2 search at m = 3") {
    const Field f(6);
    const PsapContext ctx(f);

    for (const DecimationEntry& e : known_decimations(3)) {
        if (!e.included)
            continue;
        for (std::uint64_t exp = 1; exp <= 8; ++exp) {
            const Field::Elt u0 = ctx.u0_from_exponent(exp);
            const Corollary2Result res = corollary2_search(ctx, u0, e.d);
            CHECK(res.lambda >= 1);
            CHECK(check_psap_symmetry(res.lifted));
            CHECK(restriction_sum(res.lifted, ctx.U) == 1);
            // the n <= 12 in-search oracle re-verification already ran; spot
            // check the strongest claim once more on the first hit
            if (exp == 1)
                CHECK(is_hyperbent_oracle(res.lifted));
        }
    }
}

TEST_CASE("corollary-2 search agrees with full-domain evaluation, m = 2 and 3") {
    // the search builds g on U and lifts; rebuilding the sum over every x of
    // the underlying expression must give the same truth table
    for (unsigned m : {2u, 3u}) {
        const Field f(2 * m);
        const PsapContext ctx(f);
        // pick any admissible d: for m = 2 no catalogue entry exists, so use
        // d = 2 (trivial class, three-valued fails) -- skip m = 2 search and
        // only check the identity for m = 3
        if (m == 2)
            continue;
        const Field::Elt u0 = ctx.u0_from_exponent(2);
        const std::uint64_t d = 3;
        const Corollary2Result res = corollary2_search(ctx, u0, d);
        const Field::Elt lambda_big = ctx.iso.embed(res.lambda);

        BooleanFunction direct = zero_boolean(f);
        for (std::size_t x = 1; x < f.size(); ++x) {
            // the sum S = u0 * sum_i x^(i(2^m-1)) evaluated literally
            Field::Elt partial = 0;
            for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (m - 1)); ++i)
                partial = f.add(partial, f.pow(static_cast<Field::Elt>(x),
                                               i * ((std::uint64_t{1} << m) - 1)));
            const Field::Elt s = f.mul(u0, partial);
            // Tr_1^m((Tr_m^n S)^d) + Tr_1^n(lambda S), all in the big field
            const unsigned first = subfield_trace(f, f.pow(f.trace_to(s, m), d), m);
            const unsigned second = f.abs_trace(f.mul(lambda_big, s));
            direct.table[x] = static_cast<std::uint8_t>(first ^ second);
        }
        CHECK(direct.table == res.lifted.table);
    }
}

TEST_CASE("corollary-2 preconditions") {
    const Field f(6);
    const PsapContext ctx(f);
    const Field::Elt u0 = ctx.u0_from_exponent(1);
    CHECK_THROWS_AS(corollary2_search(ctx, u0, 1), std::invalid_argument);  // two-valued
    CHECK_THROWS_AS(corollary2_search(ctx, u0, 7), std::invalid_argument);  // gcd(7, 7) != 1
}
