#pragma once

#include "ldrs/algebra/polynomial.hpp"
#include "ldrs/algebra/prime_field.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::algebra {

/// F_{q^e} for e in {1,2,3}, built on the smallest irreducible of degree e.
///
/// Elements are packed as integers in [0, q^e): the coefficient of t^i of the residue
/// polynomial is the i-th base-q digit. Base-field values embed as themselves.
/// Multiplication uses discrete-log tables over a fixed primitive element.
class GaloisField {
public:
    using Element = std::uint32_t;

    static constexpr std::uint64_t kMaxOrder = 1ull << 22;

    explicit GaloisField(PrimeModulus q, unsigned e = 1)
        : q_(q), e_(e), modulus_poly_(find_irreducible(q, e)) {
        order_ = 1;
        for (unsigned i = 0; i < e; ++i) order_ *= q.value();
        if (order_ > kMaxOrder)
            throw CapacityError("field F_" + std::to_string(q.value()) + "^" + std::to_string(e) + " too large",
                                order_, kMaxOrder);
        build_tables();
    }

    const PrimeModulus& characteristic() const noexcept { return q_; }
    unsigned degree() const noexcept { return e_; }
    std::uint64_t order() const noexcept { return order_; }
    const Polynomial& modulus_polynomial() const noexcept { return modulus_poly_; }
    Element generator() const noexcept { return generator_; }

    Element from_integer(std::int64_t n) const noexcept { return static_cast<Element>(q_.reduce(n)); }

    std::array<std::uint64_t, 3> digits(Element a) const noexcept {
        std::array<std::uint64_t, 3> d{0, 0, 0};
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = a % q_.value();
            a = static_cast<Element>(a / q_.value());
        }
        return d;
    }

    Element pack(const std::array<std::uint64_t, 3>& d) const noexcept {
        std::uint64_t out = 0;
        for (unsigned i = e_; i-- > 0;) out = out * q_.value() + d[i];
        return static_cast<Element>(out);
    }

    Element add(Element a, Element b) const noexcept {
        if (e_ == 1) return static_cast<Element>(q_.add(a, b));
        auto da = digits(a), db = digits(b);
        for (unsigned i = 0; i < e_; ++i) da[i] = q_.add(da[i], db[i]);
        return pack(da);
    }
    Element neg(Element a) const noexcept {
        if (e_ == 1) return static_cast<Element>(q_.neg(a));
        auto d = digits(a);
        for (unsigned i = 0; i < e_; ++i) d[i] = q_.neg(d[i]);
        return pack(d);
    }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (s >= order_ - 1) s -= order_ - 1;
        return exp_[s];
    }
    Element inv(Element a) const {
        if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(order_));
        return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    }
    /// 0^0 = 1.
    Element pow(Element a, std::uint64_t n) const noexcept {
        if (n == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * n) % (order_ - 1))];
    }
    /// Discrete log base generator(); a must be nonzero.
    std::uint64_t log(Element a) const noexcept { return log_[a]; }
    Element exp(std::uint64_t t) const noexcept { return exp_[t % (order_ - 1)]; }

    /// Schoolbook product reduced modulo the defining polynomial; independent of the log tables.
    Element slow_mul(Element a, Element b) const {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> pa(da.begin(), da.begin() + e_), pb(db.begin(), db.begin() + e_);
        Polynomial r = (Polynomial(q_, pa) * Polynomial(q_, pb)) % modulus_poly_;
        std::array<std::uint64_t, 3> d{0, 0, 0};
        for (unsigned i = 0; i < e_; ++i) d[i] = r.coeff(i);
        return pack(d);
    }

private:
    void build_tables() {
        const std::uint64_t n = order_ - 1;
        const auto factors = distinct_prime_factors(n);
        auto slow_pow = [&](Element a, std::uint64_t k) {
            Element r = 1;
            while (k > 0) {
                if (k & 1) r = slow_mul(r, a);
                a = slow_mul(a, a);
                k >>= 1;
            }
            return r;
        };
        generator_ = 0;
        for (Element g = 1; g < order_; ++g) {
            bool primitive = true;
            for (auto f : factors) {
                if (slow_pow(g, n / f) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                generator_ = g;
                break;
            }
        }
        if (generator_ == 0 && order_ > 2) throw VerificationError("no primitive element found");
        exp_.assign(n, 0);
        log_.assign(order_, 0);
        Element x = 1;
        for (std::uint64_t t = 0; t < n; ++t) {
            exp_[t] = x;
            log_[x] = static_cast<std::uint32_t>(t);
            x = slow_mul(x, generator_);
        }
        if (x != 1) throw VerificationError("generator order mismatch");
    }

    PrimeModulus q_;
    unsigned e_;
    Polynomial modulus_poly_;
    std::uint64_t order_ = 0;
    Element generator_ = 0;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
};

} // namespace ldrs::algebra
