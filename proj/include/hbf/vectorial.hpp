#pragma once

#include <cstdint>
#include <vector>

#include "hbf/ugroup.hpp"
#include "hbf/walsh.hpp"

namespace hbf {

/// Truth table of F: GF(2^n) -> F_2^k, entries are k-bit words.
struct VectorialFunction {
    const Field* ctx = nullptr;
    unsigned k = 0;
    std::vector<std::uint32_t> table;
};

VectorialFunction zero_vectorial(const Field& f, unsigned k);
void require_function(const VectorialFunction& F);

/// Component combination <v, F(x)> for a nonzero selector word v.
BooleanFunction component(const VectorialFunction& F, std::uint32_t v);

/// Integer-coefficient element of the group ring Z[H], H the additive group
/// of F_2^k; coeffs[b] is the coefficient of the group element b.
struct GroupRingElement {
    unsigned k = 0;
    std::vector<std::int64_t> coeffs;  // length 2^k

    bool operator==(const GroupRingElement&) const = default;
};

GroupRingElement zero_group_ring(unsigned k);

/// The element 2^(m-k) * H + 0_H that characterizes hyper-bent restriction
/// multisets. Requires k <= m.
GroupRingElement psap_target(unsigned m, unsigned k);

/// Character sum sum_b coeffs[b] * (-1)^<v,b>; v = 0 is the principal
/// character (plain coefficient sum).
std::int64_t character_sum(const GroupRingElement& A, std::uint32_t v);

/// Fourier inversion: recovers the unique A whose character sums equal the
/// given values (indexed by v, length 2^k). Throws if the values are
/// inconsistent, i.e. some reconstructed coefficient is not an integer.
GroupRingElement invert_characters(const std::vector<std::int64_t>& values, unsigned k);

/// Multiset of values of F on U as a group-ring element:
/// coeffs[b] = #{u in U : F(u) = b}.
GroupRingElement restriction_multiset(const VectorialFunction& F, const UGroup& U);

/// sum_{u in U} (-1)^<v,F(u)> == 1 for every nonzero v, computed by direct
/// signed sums (independent of the multiset path below).
bool check_condition2(const VectorialFunction& F, const UGroup& U);

/// restriction_multiset(F, U) == 2^(m-k) * H + 0_H, compared coefficient by
/// coefficient. Throws "dimension exceeds m" when k > m.
bool check_condition3(const VectorialFunction& F, const UGroup& U);

struct VectorialWitness {
    std::uint32_t v = 0;
    HyperbentWitness inner;
};

/// Definitional vectorial oracle: every nonzero component combination must
/// pass the full Boolean hyper-bent oracle.
bool is_vectorial_hyperbent_oracle(const VectorialFunction& F, bool override_guard = false,
                                   VectorialWitness* witness = nullptr);

} // namespace hbf
