#include "hbf/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbf {

namespace {
constexpr std::uint32_t kLimbBase = 1000000000;
}

BigUint::BigUint(std::uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kLimbBase));
        v /= kLimbBase;
    }
}

BigUint& BigUint::mul(std::uint64_t f) {
    if (f == 0) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        const unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(cur % kLimbBase);
        carry = cur / kLimbBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
        carry /= kLimbBase;
    }
    return *this;
}

BigUint& BigUint::div_exact(std::uint64_t d) {
    if (d == 0)
        throw std::invalid_argument("BigUint: division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const unsigned __int128 cur = rem * kLimbBase + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0)
        throw std::logic_error("BigUint: division was not exact");
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
    return *this;
}

BigUint& BigUint::add(const BigUint& other) {
    const std::size_t longest = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(longest, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longest; ++i) {
        std::uint64_t cur = carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(cur % kLimbBase);
        carry = cur / kLimbBase;
    }
    if (carry)
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

bool BigUint::fits_u64() const {
    if (limbs_.size() > 3)
        return false;
    unsigned __int128 v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * kLimbBase + limbs_[i];
    return v <= ~std::uint64_t{0};
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64())
        throw std::overflow_error("BigUint: value exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * kLimbBase + limbs_[i];
    return v;
}

std::string BigUint::to_string() const {
    if (limbs_.empty())
        return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

namespace {

// acc *= C(a, b) without a big-by-big multiply: each interleaved step keeps
// the running value equal to acc * C(a-b+i, i), an integer, so the small
// divisions stay exact.
void mul_binomial(BigUint& acc, std::uint64_t a, std::uint64_t b) {
    if (b > a) {
        acc.mul(0);
        return;
    }
    b = std::min(b, a - b);
    for (std::uint64_t i = 1; i <= b; ++i) {
        acc.mul(a - b + i);
        acc.div_exact(i);
    }
}

} // namespace

BigUint binomial(std::uint64_t a, std::uint64_t b) {
    BigUint acc{1};
    mul_binomial(acc, a, b);
    return acc;
}

CountReport count_formula(unsigned m, unsigned k) {
    if (m > 12)
        throw std::out_of_range("count_formula: m capped at 12 (n = 2m <= 24)");
    if (k < 1 || k > m)
        throw std::invalid_argument("count_formula: requires 1 <= k <= m");
    const std::uint64_t q = std::uint64_t{1} << m;
    const std::uint64_t fiber = std::uint64_t{1} << (m - k);
    BigUint core{1};
    mul_binomial(core, q + 1, fiber + 1);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i)
        mul_binomial(core, q - i * fiber, fiber);
    CountReport r;
    r.m = m;
    r.k = k;
    r.core_count = core;
    r.formula_count = core;
    r.formula_count.mul(std::uint64_t{1} << k);
    r.method = CountMethod::formula;
    return r;
}

namespace {

// lexicographic combinations of `count` members out of pool indices
bool for_each_combination(const std::vector<std::uint8_t>& pool, std::size_t count,
                          std::vector<std::uint8_t>& chosen,
                          const std::function<bool(const std::vector<std::uint8_t>&)>& body) {
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i)
        idx[i] = i;
    if (count > pool.size())
        return true;
    while (true) {
        chosen.clear();
        for (std::size_t i : idx)
            chosen.push_back(pool[i]);
        if (!body(chosen))
            return false;
        // advance
        std::size_t i = count;
        while (i-- > 0) {
            if (idx[i] != i + pool.size() - count) {
                ++idx[i];
                for (std::size_t j = i + 1; j < count; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return true;
        }
    }
}

struct GEnumState {
    const UGroup* U;
    unsigned k;
    std::size_t fiber;
    std::vector<std::uint32_t> values;
    std::uint64_t emitted = 0;
    bool stopped = false;
    const std::function<bool(const GFunction&)>* sink;
};

bool assign_fibers(GEnumState& st, std::uint32_t word, std::vector<std::uint8_t> remaining) {
    if (word == (std::uint32_t{1} << st.k)) {
        GFunction g{st.U, st.k, st.values};
        st.emitted += 1;
        if (!(*st.sink)(g)) {
            st.stopped = true;
            return false;
        }
        return true;
    }
    std::vector<std::uint8_t> chosen;
    return for_each_combination(remaining, st.fiber, chosen,
                                [&](const std::vector<std::uint8_t>& members) {
        for (std::uint8_t j : members)
            st.values[j] = word;
        std::vector<std::uint8_t> rest;
        rest.reserve(remaining.size() - members.size());
        std::size_t mi = 0;
        for (std::uint8_t j : remaining) {
            if (mi < members.size() && members[mi] == j) {
                ++mi;
                continue;
            }
            rest.push_back(j);
        }
        return assign_fibers(st, word + 1, std::move(rest));
    });
}

} // namespace

std::uint64_t enumerate_g_functions(const UGroup& U, unsigned k,
                                    const std::function<bool(const GFunction&)>& sink,
                                    std::uint64_t cap) {
    if (k < 1 || k > U.m)
        throw std::invalid_argument("enumerate_g_functions: requires 1 <= k <= m");
    const CountReport expected = count_formula(U.m, k);
    if (!expected.core_count.fits_u64() || expected.core_count.to_u64() > cap)
        throw std::invalid_argument("enumerate_g_functions: count " + expected.core_count.to_string() +
                                    " exceeds the cap");

    GEnumState st;
    st.U = &U;
    st.k = k;
    st.fiber = std::size_t{1} << (U.m - k);
    st.values.assign(U.size(), 0);
    st.sink = &sink;

    std::vector<std::uint8_t> all(U.size());
    for (std::size_t j = 0; j < all.size(); ++j)
        all[j] = static_cast<std::uint8_t>(j);

    // 0-fiber first (one extra member), then the nonzero words
    std::vector<std::uint8_t> chosen;
    for_each_combination(all, st.fiber + 1, chosen, [&](const std::vector<std::uint8_t>& zmembers) {
        for (std::uint8_t j : zmembers)
            st.values[j] = 0;
        std::vector<std::uint8_t> rest;
        rest.reserve(all.size() - zmembers.size());
        std::size_t mi = 0;
        for (std::uint8_t j : all) {
            if (mi < zmembers.size() && zmembers[mi] == j) {
                ++mi;
                continue;
            }
            rest.push_back(j);
        }
        return assign_fibers(st, 1, std::move(rest));
    });
    return st.emitted;
}

CountReport exhaustive_count_oracle(unsigned m, unsigned k, bool override_guard) {
    if (k < 1 || k > m)
        throw std::invalid_argument("exhaustive_count_oracle: requires 1 <= k <= m");
    const std::uint64_t ucount = (std::uint64_t{1} << m) + 1;
    if (!override_guard && k * ucount > 30)
        throw std::invalid_argument("exhaustive_count_oracle: (2^k)^(2^m+1) exceeds the 2^30 guard");
    if (k * ucount >= 63)
        throw std::invalid_argument("exhaustive_count_oracle: search space exceeds 2^62");

    const Field field(2 * m);
    const UGroup U = make_ugroup(field);
    const GroupRingElement target = psap_target(m, k);

    std::uint64_t core = 0;
    std::vector<std::uint32_t> values(ucount, 0);
    const std::uint64_t total = std::uint64_t{1} << (k * ucount);
    const std::uint32_t word_mask = (std::uint32_t{1} << k) - 1;
    std::vector<std::int64_t> counts(std::size_t{1} << k);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::fill(counts.begin(), counts.end(), 0);
        std::uint64_t rest = code;
        for (std::size_t j = 0; j < ucount; ++j) {
            values[j] = static_cast<std::uint32_t>(rest) & word_mask;
            counts[values[j]] += 1;
            rest >>= k;
        }
        if (!std::equal(counts.begin(), counts.end(), target.coeffs.begin()))
            continue;
        core += 1;

        // tie the count back to the definition, not just the multiset
        GFunction g{&U, k, values};
        const VectorialFunction F = lift_g_to_f(g);
        bool verified;
        if (m == 2) {
            verified = is_vectorial_hyperbent_oracle(F);
        } else {
            verified = true;
            for (std::uint32_t v = 1; v <= word_mask && verified; ++v)
                verified = restriction_sum(component(F, v), U) == 1;
        }
        if (!verified)
            throw std::logic_error("exhaustive_count_oracle: multiset hit failed re-verification");
    }

    CountReport r;
    r.m = m;
    r.k = k;
    r.core_count = BigUint{core};
    r.formula_count = BigUint{core};
    r.formula_count.mul(std::uint64_t{1} << k);
    r.method = CountMethod::exhaustive;
    return r;
}

} // namespace hbf
