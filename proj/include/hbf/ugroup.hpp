#pragma once

#include <cstdint>
#include <vector>

#include "hbf/gf2n.hpp"

namespace hbf {

/// The cyclic subgroup U of GF(2^n)*, n = 2m, of order 2^m + 1, listed as
/// u_j = (gamma^(2^m - 1))^j for j = 0 .. 2^m. Also carries s, the
/// multiplicative inverse of 2^m - 1 modulo 2^m + 1, used to invert the
/// x -> x^(2^m - 1) projection.
struct UGroup {
    const Field* ctx = nullptr;
    unsigned m = 0;
    std::uint64_t s = 0;
    std::vector<Field::Elt> elements;

    std::size_t size() const { return elements.size(); }  // 2^m + 1

    /// Index j with x^(2^m - 1) = u_j, for nonzero x; this is just the
    /// discrete log of x reduced mod 2^m + 1.
    std::size_t coset_index(Field::Elt x) const;

    /// True iff x lies in U.
    bool contains(Field::Elt x) const;
};

/// Builds U for an even-degree field. Throws for odd n.
UGroup make_ugroup(const Field& f);

} // namespace hbf
