#include "ksnull/exact.hpp"

#include <cctype>
#include <cmath>

#include "ksnull/error.hpp"

namespace ksnull {

BigInt gcd3(const BigInt& x, const BigInt& y, const BigInt& z)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (sgn(g) == 0)
        throw DegenerateInput("gcd3: all components are zero");
    return g;
}

std::optional<BigInt> integer_sqrt_exact(const BigInt& n)
{
    if (sgn(n) < 0)
        throw DomainError("integer_sqrt_exact: negative argument");
    // mpz_sqrtrem is an integer Newton iteration; the remainder is the
    // exact final check.
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (sgn(rem) != 0)
        return std::nullopt;
    return root;
}

Rat make_rat(const BigInt& num, const BigInt& den)
{
    if (sgn(den) == 0)
        throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

BigInt parse_bigint(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (!all_digits(body))
        throw DomainError("malformed integer '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_bigint(text));
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(den))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    return make_rat(parse_bigint(text.substr(0, slash)), BigInt(std::string(den), 10));
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rat& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_square_free(long d)
{
    if (d <= 0)
        return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0)
            return false;
    return true;
}

QuadElem::QuadElem(long d) : d_(d)
{
    if (!is_square_free(d))
        throw DomainError("field discriminant " + std::to_string(d) + " is not square-free");
}

QuadElem::QuadElem(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d)
{
    if (!is_square_free(d))
        throw DomainError("field discriminant " + std::to_string(d) + " is not square-free");
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

void QuadElem::check_field(const QuadElem& o) const
{
    if (d_ != o.d_)
        throw FieldMismatch("Q(sqrt " + std::to_string(d_) + ") vs Q(sqrt " + std::to_string(o.d_) + ")");
}

int QuadElem::sign() const
{
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb != 0 ? sb : sa;
    // opposite signs: compare a^2 with d b^2
    Rat lhs = a_ * a_;
    Rat rhs = Rat(d_) * b_ * b_;
    int c = cmp(lhs, rhs);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

QuadElem& QuadElem::operator+=(const QuadElem& o)
{
    check_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o)
{
    check_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o)
{
    check_field(o);
    Rat a = a_ * o.a_ + Rat(d_) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

bool operator==(const QuadElem& l, const QuadElem& r)
{
    l.check_field(r);
    return l.a_ == r.a_ && l.b_ == r.b_;
}

QuadElem QuadElem::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    Rat n = norm();
    return {a_ / n, -b_ / n, d_};
}

double QuadElem::to_double() const
{
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

QuadElem dot3(const QuadVec& u, const QuadVec& v)
{
    QuadElem s = u[0] * v[0];
    s += u[1] * v[1];
    s += u[2] * v[2];
    return s;
}

QuadVec cross3(const QuadVec& u, const QuadVec& v)
{
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const QuadVec& v)
{
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

} // namespace ksnull
