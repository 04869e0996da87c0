#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hbf/psap.hpp"

namespace hbf {

/// Crosscorrelation values C_d(t) of a length 2^m - 1 m-sequence with its
/// d-decimation, as a value -> multiplicity histogram over all shifts t.
struct CrosscorrSpectrum {
    unsigned m = 0;
    std::uint64_t d = 0;
    std::map<std::int64_t, std::uint64_t> histogram;

    std::size_t distinct_values() const { return histogram.size(); }
    bool three_valued() const { return histogram.size() == 3; }
    bool contains(std::int64_t v) const { return histogram.count(v) != 0; }
};

/// C_d(t) = sum_{x in F_{2^m}^*} (-1)^(Tr(x^d + gamma^t x)).
/// Requires gcd(d, 2^m - 1) = 1.
std::int64_t crosscorrelation(const Field& fm, std::uint64_t d, std::uint32_t t);

/// All shifts t in [0, 2^m - 2].
CrosscorrSpectrum crosscorr_spectrum(const Field& fm, std::uint64_t d);

enum class DecimationFamily {
    gold,
    kasami,
    cusick_dobbertin_a,
    cusick_dobbertin_b,
    canteaut_charpin_dobbertin,
    dobbertin_hollmann_xiang,
};

const char* family_name(DecimationFamily f);

/// One instantiation of a three-valued decimation family at a given m.
/// `included` is false when the reduced d shares a factor with 2^m - 1; the
/// entry is kept with a note instead of being dropped, since the family
/// condition itself was met.
struct DecimationEntry {
    DecimationFamily family = DecimationFamily::gold;
    std::uint64_t d = 0;      // reduced mod 2^m - 1
    std::uint64_t d_raw = 0;  // as printed by the family formula
    unsigned k = 0;           // family parameter, 0 when not applicable
    bool included = false;
    std::string note;
};

/// Every family instantiation whose congruence condition on m holds. Gold
/// and Kasami range over k = 1 .. m-1.
std::vector<DecimationEntry> known_decimations(unsigned m);

struct Corollary2Result {
    Field::Elt lambda = 0;  // element of the standalone GF(2^m)
    GFunction g;            // g(u) = Tr_1^m(G(u)^d + lambda G(u)) on U
    BooleanFunction lifted;
};

/// Searches lambda in F_{2^m}^* (increasing element index) until the lifted
/// function satisfies the restriction-sum criterion; the hit is re-verified
/// with the definitional oracle when n <= 12. Requires u0 in U \ {1},
/// gcd(d, 2^m - 1) = 1 and a three-valued C_d. Throws if the search
/// exhausts, which would contradict the existence guarantee.
Corollary2Result corollary2_search(const PsapContext& ctx, Field::Elt u0, std::uint64_t d);

} // namespace hbf
