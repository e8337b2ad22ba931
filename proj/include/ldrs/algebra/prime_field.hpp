#pragma once

#include "ldrs/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::algebra {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace detail

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Smallest prime factor of n >= 2 (n itself when prime).
inline std::uint64_t smallest_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return f;
    return n;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// An odd prime q. Construction is the only validation point.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t q) : q_(q) {
        if (q < 3) throw UsageError("modulus must be a prime >= 3, got " + std::to_string(q));
        if (!is_prime(q))
            throw UsageError(std::to_string(q) + " is not prime (divisible by " +
                             std::to_string(smallest_factor(q)) + ")");
        if (q >= (1ull << 31)) throw UsageError("modulus must be below 2^31");
    }

    std::uint64_t value() const noexcept { return q_; }
    operator std::uint64_t() const noexcept { return q_; }

    std::uint64_t reduce(std::int64_t v) const noexcept {
        std::int64_t m = v % static_cast<std::int64_t>(q_);
        return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(q_) : m);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % q_; }
    /// 0^0 = 1.
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept { return detail::powmod(a, e, q_); }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % q_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
        return detail::powmod(a, q_ - 2, q_);
    }

    auto operator<=>(const PrimeModulus&) const = default;

private:
    std::uint64_t q_;
};

/// An element of F_q carrying its modulus; mixing moduli is a usage error.
class FieldElement {
public:
    FieldElement(std::uint64_t value, PrimeModulus modulus) : value_(value % modulus.value()), modulus_(modulus) {}

    std::uint64_t value() const noexcept { return value_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }

    FieldElement inv() const { return {modulus_.inv(value_), modulus_}; }
    FieldElement pow(std::uint64_t e) const { return {modulus_.pow(value_, e), modulus_}; }
    FieldElement operator-() const { return {modulus_.neg(value_), modulus_}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.modulus_.add(a.value_, b.value_), a.modulus_};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.modulus_.sub(a.value_, b.value_), a.modulus_};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.modulus_.mul(a.value_, b.value_), a.modulus_};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return a * b.inv();
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.modulus_ != b.modulus_)
            throw UsageError("modulus mismatch: F_" + std::to_string(a.modulus_.value()) + " vs F_" +
                             std::to_string(b.modulus_.value()));
    }

    std::uint64_t value_;
    PrimeModulus modulus_;
};

/// The fixed enumeration (a_1, ..., a_q) = (0, 1, ..., q-1) used for every matrix column and vector index.
inline std::vector<FieldElement> canonical_ordering(const PrimeModulus& q) {
    std::vector<FieldElement> out;
    out.reserve(q.value());
    for (std::uint64_t i = 0; i < q.value(); ++i) out.emplace_back(i, q);
    return out;
}

} // namespace ldrs::algebra
