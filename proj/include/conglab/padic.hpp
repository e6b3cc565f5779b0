#pragma once

// Exact integer/rational arithmetic primitives: base-p digits, valuations,
// carries, residues, and modular exponentiation with exponent reduction.
// Everything here is a pure function of its inputs; values are immutable
// after construction and safe to share between threads.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conglab {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// p-adic order: a natural number or +infinity (the order of 0).
/// +infinity compares greater-or-equal to every bound, so valuation bounds
/// are vacuously satisfied by zero sums.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(Int v) { return Valuation(false, std::move(v)); }

    bool is_infinite() const { return infinite_; }
    const Int& value() const {
        if (infinite_)
            throw std::logic_error("Valuation: infinite valuation has no finite value");
        return value_;
    }

    bool operator==(const Valuation& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }

    // total order with +infinity on top
    bool operator<(const Valuation& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    bool operator>=(const Valuation& o) const { return !(*this < o); }

    bool operator>=(const Int& bound) const { return infinite_ || value_ >= bound; }
    bool operator<(const Int& bound) const { return !(*this >= bound); }

    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_) return infinity();
        return finite(value_ + o.value_);
    }
    Valuation operator+(const Int& k) const {
        if (infinite_) return infinity();
        return finite(value_ + k);
    }

    std::string str() const { return infinite_ ? "inf" : value_.get_str(); }

private:
    Valuation(bool inf, Int v) : infinite_(inf), value_(std::move(v)) {}

    bool infinite_;
    Int value_;
};

/// The pair (p, alpha) together with the modulus p^alpha.
/// p is checked for primality at construction.
struct PrimePower {
    std::uint64_t p;
    unsigned alpha;
    Int modulus;  // p^alpha, exact

    PrimePower(std::uint64_t prime, unsigned exponent);
};

/// ord_p(n): largest e with p^e | n; +infinity for n = 0.
Valuation ord(std::uint64_t p, const Int& n);

/// ord_p(n!) = sum_{i>=1} floor(n/p^i), computed without materializing n!.
Int factorial_valuation(std::uint64_t p, const Int& n);

/// Number of carries when adding a and b in base p (a, b >= 0).
/// Equals ord_p(binomial(a+b, a)).
long tau_carries(std::uint64_t p, const Int& a, const Int& b);

/// Least nonnegative residue of r modulo p^alpha, in [0, p^alpha).
/// alpha = 0 gives modulus 1, hence always 0.
Int least_residue(const Int& r, const PrimePower& pp);

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
/// Multiplicative formula with incremental exact division.
Int binomial(const Int& n, const Int& k);

/// base^exponent mod p^alpha for exponents far beyond word size.
/// The unit part of the base has its exponent reduced modulo
/// phi(p^alpha) = p^(alpha-1)(p-1); the p-part is tracked through
/// ord_p(base) so that non-units are never reduced naively.
Int pow_mod_reduced(const Int& base, const Int& exponent, const PrimePower& pp);

/// floor(log_p m) for m >= 1, by repeated integer division (no floating point).
unsigned floor_log(std::uint64_t p, const Int& m);

/// Exact rational in lowest terms (denominator > 0) with p-adic valuation
/// queries. A rational is p-integral iff valuation_at(p) >= 0, i.e. p does
/// not divide the reduced denominator.
class ValuedRational {
public:
    ValuedRational() : value_(0) {}
    explicit ValuedRational(Rat v) : value_(std::move(v)) { value_.canonicalize(); }
    ValuedRational(Int numerator, Int denominator);

    const Rat& value() const { return value_; }
    Int numerator() const { return value_.get_num(); }
    Int denominator() const { return value_.get_den(); }

    Valuation valuation_at(std::uint64_t p) const;
    bool is_p_integral(std::uint64_t p) const { return valuation_at(p) >= Int(0); }

    /// Residue mod p of a p-integral value: num * den^{-1} mod p.
    Int residue_mod_p(std::uint64_t p) const;

    ValuedRational operator-(const ValuedRational& o) const {
        return ValuedRational(Rat(value_ - o.value_));
    }
    bool operator==(const ValuedRational& o) const { return value_ == o.value_; }

    /// "n" or "n/d" in decimal.
    std::string str() const;

private:
    Rat value_;
};

/// ord_p(x - y) >= e, the congruence x = y (mod p^e) between p-integral
/// rationals.
bool congruent_mod(const ValuedRational& x, const ValuedRational& y,
                   std::uint64_t p, const Int& e);

}  // namespace conglab
