#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ksnull {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Positive gcd of three integers. Throws DegenerateInput when all are zero.
BigInt gcd3(const BigInt& x, const BigInt& y, const BigInt& z);

/// r with r*r == n, or nullopt when n is not a perfect square.
/// Throws DomainError for negative n.
std::optional<BigInt> integer_sqrt_exact(const BigInt& n);

/// Canonical num/den. Throws DomainError on a zero denominator.
Rat make_rat(const BigInt& num, const BigInt& den);

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// Decimal points and exponents are rejected. Throws DomainError.
Rat parse_rat(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const BigInt& n);

/// Exact comparison helpers that read better than mpq_cmp at call sites.
inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const BigInt& n) { return sgn(n); }

/// Element a + b*sqrt(d) of Q(sqrt d), d a square-free positive integer.
/// d is carried on every value and checked on every binary operation.
/// For d == 1 the b part is folded into a so that b is always zero.
class QuadElem {
public:
    QuadElem() = default;
    explicit QuadElem(long d);
    QuadElem(Rat a, Rat b, long d);

    static QuadElem from_int(long a, long b, long d) { return {Rat(a), Rat(b), d}; }

    const Rat& a() const noexcept { return a_; }
    const Rat& b() const noexcept { return b_; }
    long field() const noexcept { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Exact sign of a + b*sqrt(d).
    int sign() const;

    QuadElem operator-() const { return {-a_, -b_, d_}; }
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);

    friend QuadElem operator+(QuadElem l, const QuadElem& r) { return l += r; }
    friend QuadElem operator-(QuadElem l, const QuadElem& r) { return l -= r; }
    friend QuadElem operator*(QuadElem l, const QuadElem& r) { return l *= r; }

    /// Exact equality. Throws FieldMismatch when fields differ.
    friend bool operator==(const QuadElem& l, const QuadElem& r);

    /// Multiplicative inverse. Throws DomainError on zero.
    QuadElem inverse() const;

    /// a*a - d*b*b; zero only for the zero element.
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    double to_double() const;

private:
    void check_field(const QuadElem& o) const;

    Rat a_{0};
    Rat b_{0};
    long d_ = 1;
};

using QuadVec = std::array<QuadElem, 3>;

/// True when d > 0 has no repeated prime factor.
bool is_square_free(long d);

QuadElem dot3(const QuadVec& u, const QuadVec& v);
QuadVec cross3(const QuadVec& u, const QuadVec& v);
bool is_zero(const QuadVec& v);

} // namespace ksnull
