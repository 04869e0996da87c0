#include "hbf/msequence.hpp"

#include <numeric>
#include <stdexcept>

namespace hbf {

namespace {

void require_decimation(const Field& fm, std::uint64_t d) {
    if (d == 0 || std::gcd(d, static_cast<std::uint64_t>(fm.order())) != 1)
        throw std::invalid_argument("decimation d must be coprime with 2^m - 1");
}

} // namespace

std::int64_t crosscorrelation(const Field& fm, std::uint64_t d, std::uint32_t t) {
    require_decimation(fm, d);
    const Field::Elt c = fm.pow_gamma(t);
    std::int64_t sum = 0;
    for (std::uint32_t i = 0; i < fm.order(); ++i) {
        const Field::Elt x = fm.pow_gamma(i);
        const Field::Elt xd = fm.pow_gamma(i * d);
        sum += fm.abs_trace(fm.add(xd, fm.mul(c, x))) ? -1 : 1;
    }
    return sum;
}

CrosscorrSpectrum crosscorr_spectrum(const Field& fm, std::uint64_t d) {
    require_decimation(fm, d);
    CrosscorrSpectrum s;
    s.m = fm.degree();
    s.d = d % fm.order();
    for (std::uint32_t t = 0; t < fm.order(); ++t)
        s.histogram[crosscorrelation(fm, d, t)] += 1;
    return s;
}

const char* family_name(DecimationFamily f) {
    switch (f) {
        case DecimationFamily::gold: return "gold";
        case DecimationFamily::kasami: return "kasami";
        case DecimationFamily::cusick_dobbertin_a: return "cusick_dobbertin_a";
        case DecimationFamily::cusick_dobbertin_b: return "cusick_dobbertin_b";
        case DecimationFamily::canteaut_charpin_dobbertin: return "canteaut_charpin_dobbertin";
        case DecimationFamily::dobbertin_hollmann_xiang: return "dobbertin_hollmann_xiang";
    }
    return "?";
}

std::vector<DecimationEntry> known_decimations(unsigned m) {
    if (m < 2)
        throw std::invalid_argument("known_decimations: m must be at least 2");
    const std::uint64_t order = (std::uint64_t{1} << m) - 1;
    std::vector<DecimationEntry> out;

    const auto trivial_class = [order, m](std::uint64_t d) {
        // d ~ 2^j is the identity decimation up to the Frobenius shuffle
        std::uint64_t c = 1;
        for (unsigned j = 0; j < m; ++j) {
            if (d == c)
                return true;
            c = c * 2 % order;
        }
        return false;
    };

    const auto push = [&](DecimationFamily family, std::uint64_t d_raw, unsigned k) {
        DecimationEntry e;
        e.family = family;
        e.k = k;
        e.d_raw = d_raw;
        e.d = d_raw % order;
        if (e.d == 0 || std::gcd(e.d, order) != 1) {
            e.included = false;
            e.note = "reduced d shares a factor with 2^m - 1";
        } else if (trivial_class(e.d)) {
            e.included = false;
            e.note = "reduces to a power of 2 (trivial decimation)";
        } else {
            e.included = true;
        }
        out.push_back(std::move(e));
    };

    for (unsigned k = 1; k < m; ++k) {
        if ((m / std::gcd(k, m)) % 2 == 1) {
            push(DecimationFamily::gold, (std::uint64_t{1} << k) + 1, k);
            push(DecimationFamily::kasami,
                 (std::uint64_t{1} << (2 * k)) - (std::uint64_t{1} << k) + 1, k);
        }
    }
    if (m % 4 == 2) {
        push(DecimationFamily::cusick_dobbertin_a,
             (std::uint64_t{1} << (m / 2)) + (std::uint64_t{1} << ((m + 2) / 4)) + 1, 0);
        push(DecimationFamily::cusick_dobbertin_b, (std::uint64_t{1} << ((m + 2) / 2)) + 3, 0);
    }
    if (m % 2 == 1)
        push(DecimationFamily::canteaut_charpin_dobbertin,
             (std::uint64_t{1} << ((m - 1) / 2)) + 3, 0);
    if (m % 4 == 1)
        push(DecimationFamily::dobbertin_hollmann_xiang,
             (std::uint64_t{1} << ((m - 1) / 2)) + (std::uint64_t{1} << ((m - 1) / 4)) - 1, 0);
    if (m % 4 == 3)
        push(DecimationFamily::dobbertin_hollmann_xiang,
             (std::uint64_t{1} << ((m - 1) / 2)) + (std::uint64_t{1} << ((3 * m - 1) / 4)) - 1, 0);
    return out;
}

Corollary2Result corollary2_search(const PsapContext& ctx, Field::Elt u0, std::uint64_t d) {
    const Field& small = ctx.small;
    require_decimation(small, d);
    if (!crosscorr_spectrum(small, d).three_valued())
        throw std::invalid_argument("corollary2_search: C_d is not three-valued");

    const std::vector<Field::Elt> core = t_construction_core(ctx, u0);

    for (Field::Elt lambda = 1; lambda < small.size(); ++lambda) {
        GFunction g{&ctx.U, 1, std::vector<std::uint32_t>(core.size())};
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < core.size(); ++j) {
            const Field::Elt z = small.add(small.pow(core[j], d), small.mul(lambda, core[j]));
            g.values[j] = small.abs_trace(z);
            sum += g.values[j] ? -1 : 1;
        }
        if (sum != 1)
            continue;

        Corollary2Result res;
        res.lambda = lambda;
        res.g = g;
        const VectorialFunction F = lift_g_to_f(g);
        res.lifted = component(F, 1);
        if (ctx.big->degree() <= 12 && !is_hyperbent_oracle(res.lifted))
            throw std::logic_error("corollary2_search: criterion hit failed the definitional oracle");
        return res;
    }
    throw std::runtime_error("corollary2_search: no lambda found; this contradicts the existence guarantee");
}

} // namespace hbf
