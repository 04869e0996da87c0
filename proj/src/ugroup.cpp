#include "hbf/ugroup.hpp"

#include <stdexcept>
#include <utility>

namespace hbf {

std::size_t UGroup::coset_index(Field::Elt x) const {
    return ctx->log(x) % (size());
}

bool UGroup::contains(Field::Elt x) const {
    if (x == 0)
        return false;
    // U is generated by gamma^(2^m - 1), so membership = exponent divisible by it
    const std::uint32_t step = (std::uint32_t{1} << m) - 1;
    return ctx->log(x) % step == 0;
}

UGroup make_ugroup(const Field& f) {
    if (f.degree() % 2 != 0)
        throw std::invalid_argument("make_ugroup: n must be even");
    UGroup u;
    u.ctx = &f;
    u.m = f.degree() / 2;
    const std::uint64_t q = std::uint64_t{1} << u.m;

    const Field::Elt gen = f.pow_gamma(q - 1);
    u.elements.reserve(q + 1);
    Field::Elt cur = 1;
    for (std::uint64_t j = 0; j <= q; ++j) {
        u.elements.push_back(cur);
        cur = f.mul(cur, gen);
    }

    // extended Euclid for s = (2^m - 1)^-1 mod (2^m + 1)
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(q + 1), r1 = static_cast<std::int64_t>(q - 1);
    while (r1 != 0) {
        const std::int64_t quo = r0 / r1;
        t0 = std::exchange(t1, t0 - quo * t1);
        r0 = std::exchange(r1, r0 - quo * r1);
    }
    const std::int64_t mod = static_cast<std::int64_t>(q + 1);
    u.s = static_cast<std::uint64_t>(((t0 % mod) + mod) % mod);
    return u;
}

} // namespace hbf
