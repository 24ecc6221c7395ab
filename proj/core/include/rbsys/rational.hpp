#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rbsys {

// Exact rational scalar over arbitrary-precision integers. Values are
// kept in canonical form (lowest terms, positive denominator), so
// operator== is structural equality.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Parses "p" or "p/q" with optional sign; rejects q = 0.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // Canonical "p/q" spelling, denominator always present ("3" -> "3/1").
    std::string str() const;
    // Human-facing spelling, "/1" dropped.
    std::string pretty() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

// (-1)^e as a Rational, for signed sums.
inline Rational sign_pow(long e) { return ((e % 2 + 2) % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace rbsys
