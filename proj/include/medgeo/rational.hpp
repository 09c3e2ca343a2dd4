#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "medgeo/errors.hpp"

namespace medgeo {

/**
 * Exact rational number. Always stored in reduced form with a positive
 * denominator; every operation is exact. Values are immutable in spirit:
 * all operators return fresh values and nothing here touches shared state,
 * so Rats can be copied between threads freely.
 */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class& v) : v_(v) { canonical(); }
    explicit Rat(const mpz_class& num, const mpz_class& den);

    /// Parses "p", "-p", "p/q" (decimal digits). Throws invalid_input otherwise.
    static Rat parse(const std::string& s);

    /// m / 2^shift, reduced.
    static Rat dyadic(const mpz_class& m, unsigned shift);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat abs() const { return is_negative() ? -*this : *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow_uint(unsigned long e) const;

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    /// Decimal rendering with `digits` fractional digits, rounded half away
    /// from zero. For human consumption only; never replaces exact output.
    std::string decimal(unsigned digits) const;

    const mpq_class& raw() const { return v_; }

private:
    void canonical() { v_.canonicalize(); }
    mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

/// Middle value of three, by comparison only (no arithmetic).
const Rat& median3(const Rat& a, const Rat& b, const Rat& c);

} // namespace medgeo
