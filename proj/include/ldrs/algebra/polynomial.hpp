#pragma once

#include "ldrs/algebra/prime_field.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ldrs::algebra {

/// Dense univariate polynomial over F_q, lowest degree first. The zero polynomial has no coefficients.
class Polynomial {
public:
    explicit Polynomial(PrimeModulus q) : q_(q) {}
    Polynomial(PrimeModulus q, std::vector<std::uint64_t> coeffs) : q_(q), c_(std::move(coeffs)) {
        for (auto& v : c_) v %= q_.value();
        trim();
    }

    static Polynomial monomial(PrimeModulus q, std::size_t degree, std::uint64_t coeff = 1) {
        std::vector<std::uint64_t> c(degree + 1, 0);
        c[degree] = coeff;
        return Polynomial(q, std::move(c));
    }

    /// prod (t - r) over the given roots.
    static Polynomial from_roots(PrimeModulus q, const std::vector<std::uint64_t>& roots) {
        Polynomial out(q, {1});
        for (auto r : roots) out = out * Polynomial(q, {q.neg(r % q.value()), 1});
        return out;
    }

    const PrimeModulus& modulus() const noexcept { return q_; }
    const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FieldElement coefficient(std::size_t i) const { return {coeff(i), q_}; }
    std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

    std::uint64_t evaluate(std::uint64_t x) const noexcept {
        std::uint64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = q_.add(q_.mul(acc, x), *it);
        return acc;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        const std::uint64_t li = q_.inv(leading());
        std::vector<std::uint64_t> c(c_);
        for (auto& v : c) v = q_.mul(v, li);
        return Polynomial(q_, std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.q_.add(a.coeff(i), b.coeff(i));
        return Polynomial(a.q_, std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.q_.sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.q_, std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.q_);
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = a.q_.add(c[i + j], a.q_.mul(a.c_[i], b.c_[j]));
        return Polynomial(a.q_, std::move(c));
    }

    /// (quotient, remainder); divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        const auto& q = a.q_;
        std::vector<std::uint64_t> rem(a.c_);
        if (a.degree() < b.degree()) return {Polynomial(q), a};
        std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
        const std::uint64_t li = q.inv(b.leading());
        for (long i = a.degree(); i >= b.degree(); --i) {
            const std::uint64_t factor = q.mul(rem[static_cast<std::size_t>(i)], li);
            const std::size_t shift = static_cast<std::size_t>(i - b.degree());
            quot[shift] = factor;
            if (factor == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[shift + j] = q.sub(rem[shift + j], q.mul(factor, b.c_[j]));
        }
        return {Polynomial(q, std::move(quot)), Polynomial(q, std::move(rem))};
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const auto v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (!out.empty()) out += " + ";
            if (v != 1 || i == 0) out += std::to_string(v);
            if (i >= 1) out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    static void check(const Polynomial& a, const Polynomial& b) {
        if (a.q_ != b.q_) throw UsageError("polynomial modulus mismatch");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeModulus q_;
    std::vector<std::uint64_t> c_;
};

/// Lagrange interpolation through (xs[i], ys[i]); xs must be distinct mod q.
inline Polynomial interpolate(const PrimeModulus& q, const std::vector<std::uint64_t>& xs,
                              const std::vector<std::uint64_t>& ys) {
    if (xs.size() != ys.size()) throw UsageError("interpolate: node and value counts differ");
    Polynomial out(q);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial basis(q, {1});
        std::uint64_t denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial(q, {q.neg(xs[j] % q.value()), 1});
            denom = q.mul(denom, q.sub(xs[i] % q.value(), xs[j] % q.value()));
        }
        if (denom == 0) throw DomainError("interpolate: repeated node");
        out = out + basis * Polynomial(q, {q.mul(ys[i] % q.value(), q.inv(denom))});
    }
    return out;
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^exp mod m by square-and-multiply.
inline Polynomial powmod(Polynomial base, std::uint64_t exp, const Polynomial& m) {
    Polynomial result = Polynomial(m.modulus(), {1}) % m;
    base = base % m;
    while (exp > 0) {
        if (exp & 1) result = (result * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return result;
}

/// Distinct-degree test: f of degree e is irreducible iff gcd(t^(q^i) - t, f) = 1 for 1 <= i <= e/2.
inline bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const auto& q = f.modulus();
    const Polynomial t = Polynomial::monomial(q, 1);
    Polynomial frob = t;
    for (long i = 1; i <= f.degree() / 2; ++i) {
        frob = powmod(frob, q.value(), f);
        if (gcd(frob - t, f).degree() != 0) return false;
    }
    return true;
}

/// Smallest monic irreducible of degree e in {1,2,3}: coefficient vectors (c_0..c_{e-1}) are
/// scanned as base-q integers with c_0 least significant.
inline Polynomial find_irreducible(const PrimeModulus& q, unsigned e) {
    if (e < 1 || e > 3) throw UsageError("extension degree must be 1, 2 or 3, got " + std::to_string(e));
    std::uint64_t total = 1;
    for (unsigned i = 0; i < e; ++i) total *= q.value();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint64_t> c(e + 1, 0);
        std::uint64_t rest = code;
        for (unsigned i = 0; i < e; ++i) {
            c[i] = rest % q.value();
            rest /= q.value();
        }
        c[e] = 1;
        Polynomial f(q, std::move(c));
        if (is_irreducible(f)) return f;
    }
    throw VerificationError("no irreducible polynomial found");  // unreachable
}

} // namespace ldrs::algebra
