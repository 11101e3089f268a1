#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace klein_lie {

// Exact rational scalar over arbitrary-precision integers. Always stored in
// lowest terms with positive denominator; zero is 0/1. All arithmetic is
// exact -- there is no floating-point fallback anywhere in this library.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : value_(q) { canonicalize(); }
    explicit Rational(const mpz_class& n) : value_(n) {}

    static Rational from_integer(const mpz_class& n) { return Rational(n); }

    // Parses "p", "-p", "p/q". Returns nullopt on malformed input or q == 0.
    static std::optional<Rational> parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    // True iff *this is the square of a rational; sqrt() then returns the
    // nonnegative square root. Used by the Schur normalization, which must
    // surface non-square scalars instead of leaving the field.
    bool is_perfect_square() const;
    Rational sqrt() const;

    // "p" for integers, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void canonicalize() { value_.canonicalize(); }
    mpq_class value_;
};

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace klein_lie
