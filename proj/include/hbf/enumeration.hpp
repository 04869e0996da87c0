#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hbf/psap.hpp"

namespace hbf {

/// Unsigned arbitrary-precision integer, base 10^9 limbs. Only what exact
/// binomial products need: multiply by a machine word, exact small division,
/// comparison and decimal printing.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    BigUint& mul(std::uint64_t f);
    /// Exact division; throws if a remainder would be left.
    BigUint& div_exact(std::uint64_t d);
    BigUint& add(const BigUint& other);

    bool operator==(const BigUint&) const = default;
    bool fits_u64() const;
    std::uint64_t to_u64() const;
    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, < 10^9, no leading zeros
};

/// C(a, b) exactly.
BigUint binomial(std::uint64_t a, std::uint64_t b);

enum class CountMethod { formula, exhaustive, generated };

struct CountReport {
    unsigned m = 0, k = 0;
    BigUint formula_count;  // includes the 2^k translations
    BigUint core_count;     // functions with F(0) = 0
    CountMethod method = CountMethod::formula;
};

/// Exact count of canonical-form vectorial hyper-bent functions:
///   2^k * C(2^m+1, 2^(m-k)+1) * prod_{i=1}^{2^k-1} C(2^m - i 2^(m-k), 2^(m-k)).
/// Requires 1 <= k <= m.
CountReport count_formula(unsigned m, unsigned k);

/// Yields every g: U -> F_2^k whose value multiset matches the hyper-bent
/// characterization (0 hit 2^(m-k)+1 times, every other word 2^(m-k) times),
/// in a canonical order: the 0-fiber is chosen first, then the fibers of the
/// nonzero words in increasing word order, members of each fiber in
/// increasing U index, combinations lexicographic. Returns the number
/// yielded; the sink may return false to stop early. Throws if the total
/// exceeds `cap`.
std::uint64_t enumerate_g_functions(const UGroup& U, unsigned k,
                                    const std::function<bool(const GFunction&)>& sink,
                                    std::uint64_t cap = 1u << 20);

/// Counts by brute force over all (2^k)^(2^m+1) maps g: U -> F_2^k, keeping
/// those whose restriction multiset matches. Every hit is re-verified: at
/// m = 2 through the full definitional vectorial oracle, otherwise through
/// the per-component restriction sums. Guard: k(2^m+1) <= 30 unless
/// overridden.
CountReport exhaustive_count_oracle(unsigned m, unsigned k, bool override_guard = false);

} // namespace hbf
