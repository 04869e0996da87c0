#pragma once

#include <cstdint>
#include <vector>

namespace hbf {

/// GF(2^n) with elements in the polynomial basis {1, x, ..., x^(n-1)}:
/// bit i of an element's integer index is the coefficient of x^i.
///
/// One modulus per degree is shipped (see shipped_modulus); every shipped
/// modulus is irreducible with the residue class of x primitive, so
/// gamma() == 2 always generates the multiplicative group and truth tables
/// indexed by element are reproducible bit for bit. Multiplication and
/// inversion run on log/antilog tables, built and checked at construction.
///
/// Contexts are immutable after construction and safe to share across
/// threads; every operation is a pure function of (context, operands).
class Field {
public:
    using Elt = std::uint32_t;

    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 24;

    /// Field with the shipped modulus for degree n (2 <= n <= 24).
    explicit Field(unsigned n);

    /// Field with an explicit modulus (bit i = coefficient of x^i, degree n).
    /// Irreducibility is checked by trial division against every factor of
    /// degree <= n/2, and x is required to have order exactly 2^n - 1.
    Field(unsigned n, std::uint64_t modulus);

    static std::uint64_t shipped_modulus(unsigned n);

    unsigned degree() const { return n_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint32_t order() const { return order_; }   // 2^n - 1
    std::size_t size() const { return size_; }       // 2^n
    Elt gamma() const { return 2; }                  // the class of x

    Elt add(Elt a, Elt b) const { return checked(a) ^ checked(b); }
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;                            // a != 0
    Elt pow(Elt a, std::uint64_t e) const;           // 0^0 = 1
    Elt pow_gamma(std::uint64_t e) const { return antilog_[e % order_]; }
    std::uint32_t log(Elt a) const;                  // discrete log base gamma, a != 0

    Elt square(Elt a) const { return mul(a, a); }
    Elt sqrt(Elt a) const { return pow(a, std::uint64_t{1} << (n_ - 1)); }
    Elt frobenius(Elt a, unsigned k = 1) const;      // a^(2^k)

    /// Absolute trace Tr_1^n as 0/1; linear, evaluated through a mask.
    unsigned abs_trace(Elt a) const;
    /// Relative trace Tr_k^n(a) = sum of a^(2^(ki)); k must divide n.
    /// The result lies in the degree-k subfield.
    Elt trace_to(Elt a, unsigned k) const;
    /// True iff a is fixed by z -> z^(2^k), i.e. lies in the degree-k subfield.
    bool in_subfield(Elt a, unsigned k) const;

    bool same(const Field& other) const {
        return n_ == other.n_ && modulus_ == other.modulus_;
    }

private:
    void build(unsigned n, std::uint64_t modulus);
    Elt checked(Elt a) const;

    unsigned n_ = 0;
    std::uint64_t modulus_ = 0;
    std::uint32_t order_ = 0;
    std::size_t size_ = 0;
    std::uint32_t trace_mask_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<Elt> antilog_;
};

/// Throws std::invalid_argument unless both fields have the same degree and
/// modulus.
void require_same_field(const Field& a, const Field& b);

/// Absolute trace of the degree-k subfield, sum_{i<k} a^(2^i), as 0/1.
/// a must lie in the subfield (k | n). For k = n this is Field::abs_trace.
unsigned subfield_trace(const Field& f, Field::Elt a, unsigned k);

/// An ordered basis of the degree-k subfield together with its trace-dual:
/// subfield_trace(primal[i] * dual[j]) == (i == j).
struct DualBasis {
    unsigned k = 0;
    std::vector<Field::Elt> primal;
    std::vector<Field::Elt> dual;
};

/// Computes the unique dual basis of A inside the degree-k subfield, where
/// k = A.size(). A must be F_2-linearly independent and contained in the
/// subfield; the trace form is non-degenerate there, so the dual exists and
/// is unique, making this deterministic.
DualBasis dual_basis(const Field& f, const std::vector<Field::Elt>& A);

/// Canonical field isomorphism between a standalone GF(2^k) and the degree-k
/// subfield of a bigger field (k | n). The image of x is the root of the
/// small modulus with the smallest element index in the big field, so the
/// embedding is deterministic. Both directions are O(1) through discrete
/// logs; no per-element tables are kept.
class SubfieldIso {
public:
    SubfieldIso(const Field& big, const Field& small);

    const Field& big() const { return *big_; }
    const Field& small() const { return *small_; }
    Field::Elt root() const { return beta_; }

    Field::Elt embed(Field::Elt small_elt) const;
    /// Inverse of embed; big_elt must lie in the embedded subfield.
    Field::Elt project(Field::Elt big_elt) const;

private:
    const Field* big_;
    const Field* small_;
    Field::Elt beta_;          // image of x, a root of small.modulus()
    std::uint32_t spread_;     // (2^n-1)/(2^k-1)
    std::uint32_t cofactor_;   // log_big(beta) / spread_, coprime to 2^k-1
    std::uint32_t cofactor_inv_;
};

} // namespace hbf
