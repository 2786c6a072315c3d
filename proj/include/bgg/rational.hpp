#pragma once

#include <gmp.h>
#include <iosfwd>
#include <string>

namespace bgg {

// Arbitrary-precision rational. Always canonical: gcd(num, den) = 1, den > 0,
// zero is 0/1. Value semantics over mpq_t.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) { mpq_init(v_); mpq_set_si(v_, n, 1); }
    Rational(long n, long d);
    Rational(const Rational& o) { mpq_init(v_); mpq_set(v_, o.v_); }
    Rational(Rational&& o) noexcept { mpq_init(v_); mpq_swap(v_, o.v_); }
    ~Rational() { mpq_clear(v_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }

    // Parses "p" or "p/q" in base 10. Throws std::invalid_argument on malformed
    // input or q = 0.
    static Rational parse(const std::string& s);

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }

    Rational inv() const;

    // "p" when den = 1, else "p/q".
    std::string str() const;

    // Numerator and denominator mod p (den invertible required by caller).
    long num_mod(long p) const;
    long den_mod(long p) const;

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace bgg
