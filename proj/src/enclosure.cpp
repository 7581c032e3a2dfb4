#include <algorithm>

#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"

namespace ksnull {

namespace {

struct Interval {
    Rat lo, hi;
};

BigInt pow2(unsigned bits)
{
    BigInt p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), bits);
    return p;
}

BigInt floor_of(const Rat& x)
{
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

BigInt ceil_of(const Rat& x)
{
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return c;
}

BigInt isqrt(const BigInt& n)
{
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// [lo, hi] containing sqrt(x) for x >= 0, with 2^-bits resolution.
Interval sqrt_bracket(const Interval& x, unsigned bits)
{
    const BigInt scale = pow2(bits);
    const BigInt scale2 = scale * scale;
    BigInt lo_floor = floor_of(x.lo * Rat(scale2));
    if (sgn(lo_floor) < 0)
        lo_floor = 0;
    BigInt lo = isqrt(lo_floor);
    BigInt hi = isqrt(ceil_of(x.hi * Rat(scale2))) + 1;
    return {make_rat(lo, scale), make_rat(hi, scale)};
}

Interval enclose(const QuadElem& q, const Interval& sqrt_d)
{
    if (q.is_rational())
        return {q.a(), q.a()};
    Rat x = q.b() * sqrt_d.lo;
    Rat y = q.b() * sqrt_d.hi;
    if (x > y)
        std::swap(x, y);
    return {q.a() + x, q.a() + y};
}

} // namespace

Enclosure enclose_unit(const QuadVec& v, unsigned bits)
{
    if (is_zero(v))
        throw DegenerateInput("enclosure of the zero vector");
    if (auto p = rational_sphere_point(v)) {
        // Exact ray: the enclosure collapses to the point itself.
        return Enclosure{{p->coord(0), p->coord(1), p->coord(2)}, Rat(0)};
    }
    const long d = v[0].field();
    Interval sqrt_d = d == 1 ? Interval{1, 1} : sqrt_bracket({Rat(d), Rat(d)}, bits);

    // |v|^2 is computed exactly in the field first, then bracketed once.
    Interval norm2 = enclose(dot3(v, v), sqrt_d);
    Interval norm = sqrt_bracket(norm2, bits);

    const BigInt scale = pow2(bits);
    Enclosure out;
    out.radius = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        Interval c = enclose(v[i], sqrt_d);
        Interval u;
        if (sgn(c.lo) >= 0)
            u = {c.lo / norm.hi, c.hi / norm.lo};
        else if (sgn(c.hi) <= 0)
            u = {c.lo / norm.lo, c.hi / norm.hi};
        else
            u = {c.lo / norm.lo, c.hi / norm.lo};
        // Round the midpoint to the 2^-bits grid to keep the center small.
        Rat mid = (u.lo + u.hi) / 2;
        Rat center = make_rat(floor_of(mid * Rat(scale) + Rat(1, 2)), scale);
        Rat r = std::max<Rat>(center - u.lo, u.hi - center);
        if (r > out.radius)
            out.radius = r;
        out.center[i] = center;
    }
    return out;
}

} // namespace ksnull
