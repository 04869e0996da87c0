#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hbf/gf2n.hpp"

namespace hbf {

/// Truth table of f: GF(2^n) -> F_2, indexed by element index (entry 0 is
/// the zero element).
struct BooleanFunction {
    const Field* ctx = nullptr;
    std::vector<std::uint8_t> table;
};

BooleanFunction zero_boolean(const Field& f);

struct WalshSpectrum {
    std::vector<std::int64_t> values;  // indexed by lambda

    bool all_plus_minus(std::int64_t mag) const;
    /// sum of squared values; 2^(2n) by Parseval
    std::uint64_t energy() const;
};

/// Extended Walsh-Hadamard coefficient
///   sum_x (-1)^(f(x) + Tr(lambda * x^t)),
/// computed by the definitional sum over all 2^n inputs. Requires
/// gcd(t, 2^n - 1) = 1; t = 1 is the ordinary Walsh coefficient.
std::int64_t extended_walsh(const BooleanFunction& f, Field::Elt lambda, std::uint32_t t);

/// All extended coefficients for one exponent t: the truth table is permuted
/// by x -> x^t (a bijection fixing 0 when gcd(t, 2^n - 1) = 1) and a fast
/// in-place butterfly runs in O(2^n * n), after which dot-product indices
/// are relabelled to trace-kernel indices.
WalshSpectrum full_spectrum(const BooleanFunction& f, std::uint32_t t);

/// Bent test: every ordinary Walsh value is +-2^(n/2). n must be even.
bool is_bent(const BooleanFunction& f);

struct HyperbentWitness {
    std::uint32_t t = 0;
    Field::Elt lambda = 0;
    std::int64_t value = 0;
};

/// Number of worker threads used by the oracle sweeps (default: hardware
/// concurrency). Verdicts and witnesses do not depend on this.
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Definitional hyper-bent oracle: sweeps EVERY t in [1, 2^n - 2] coprime to
/// 2^n - 1 with no cyclotomic reduction and demands +-2^(n/2) everywhere.
/// n must be even and at most 16 unless override_guard is set. On failure
/// the smallest failing (t, lambda) is reported.
bool is_hyperbent_oracle(const BooleanFunction& f, bool override_guard = false,
                         HyperbentWitness* witness = nullptr);

/// Same verdict as the oracle but sweeping only one representative per
/// cyclotomic coset of t mod 2^n - 1. Kept separate from the oracle on
/// purpose; equivalence is established by tests, not assumed.
bool is_hyperbent_cosets(const BooleanFunction& f, bool override_guard = false);

/// All t in [1, 2^n - 2] with gcd(t, 2^n - 1) = 1, ascending.
std::vector<std::uint32_t> coprime_exponents(unsigned n);
/// Smallest member of each cyclotomic coset {t * 2^i mod 2^n - 1} among the
/// coprime exponents.
std::vector<std::uint32_t> coset_leader_exponents(unsigned n);

} // namespace hbf
