#include "ksnull/sphere.hpp"

#include <stdexcept>

#include "ksnull/error.hpp"

namespace ksnull {

std::string Direction::str() const
{
    return "(" + c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str() + ")";
}

Direction make_direction(const BigInt& x, const BigInt& y, const BigInt& z)
{
    BigInt g = gcd3(x, y, z);
    if (g == 1)
        return Direction(x, y, z);
    return Direction(x / g, y / g, z / g);
}

std::string SpherePoint::str() const
{
    if (n_ == 1)
        return dir_.str();
    return dir_.str() + "/" + n_.get_str();
}

std::array<double, 3> SpherePoint::to_double() const
{
    // Components can exceed the double range, so divide as rationals.
    return {coord(0).get_d(), coord(1).get_d(), coord(2).get_d()};
}

SpherePoint as_sphere_point(const Direction& d)
{
    auto root = integer_sqrt_exact(d.norm2());
    if (!root)
        throw NotOnRationalSphere(d.str() + " has non-square norm " + d.norm2().get_str());
    int odd = 0;
    for (std::size_t i = 0; i < 3; ++i)
        odd += mpz_odd_p(d[i].get_mpz_t()) ? 1 : 0;
    // x^2+y^2+z^2 = n^2 with gcd 1 forces exactly one odd component (mod 4).
    if (odd != 1)
        throw std::logic_error("rational sphere point " + d.str() + " violates the one-odd-component rule");
    return SpherePoint(d, *root);
}

SpherePoint sphere_point(long x, long y, long z)
{
    return as_sphere_point(make_direction(x, y, z));
}

const char* to_string(Color c) { return c == Color::Yes ? "yes" : "no"; }

std::ostream& operator<<(std::ostream& os, Color c) { return os << to_string(c); }

Color parity_color(const SpherePoint& p)
{
    return mpz_odd_p(p.dir().z().get_mpz_t()) ? Color::Yes : Color::No;
}

BigInt dot(const Direction& a, const Direction& b)
{
    return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

Direction cross(const Direction& a, const Direction& b)
{
    BigInt cx = a.y() * b.z() - a.z() * b.y();
    BigInt cy = a.z() * b.x() - a.x() * b.z();
    BigInt cz = a.x() * b.y() - a.y() * b.x();
    if (sgn(cx) == 0 && sgn(cy) == 0 && sgn(cz) == 0)
        throw DegenerateInput("cross product of parallel directions " + a.str() + ", " + b.str());
    return make_direction(cx, cy, cz);
}

RationalTriad::RationalTriad(SpherePoint u, SpherePoint v, SpherePoint w)
    : m_{std::move(u), std::move(v), std::move(w)}
{
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (sgn(dot(m_[i], m_[j])) != 0)
                throw NotOrthogonal("triad members " + m_[i].str() + " and " + m_[j].str() + " are not orthogonal");
    if (!cross(m_[0].dir(), m_[1].dir()).projectively_equal(m_[2].dir()))
        throw NotOrthogonal("third triad member is not parallel to the cross product");
}

RationalTriad make_triad(const SpherePoint& u, const SpherePoint& v)
{
    if (sgn(dot(u, v)) != 0)
        throw NotOrthogonal(u.str() + " and " + v.str() + " are not orthogonal");
    // |u x v| = |u||v| for orthogonal inputs, so the completion is always a
    // rational sphere point.
    return RationalTriad(u, v, as_sphere_point(cross(u.dir(), v.dir())));
}

std::array<Color, 3> triad_coloring(const RationalTriad& t)
{
    std::array<Color, 3> c{parity_color(t.u()), parity_color(t.v()), parity_color(t.w())};
    int yes = 0;
    for (Color x : c)
        yes += x == Color::Yes ? 1 : 0;
    if (yes != 1)
        throw std::logic_error("z-parity gave " + std::to_string(yes) + " yes colors on a rational triad");
    return c;
}

SpherePoint equator_point(const Rat& t)
{
    const BigInt& p = t.get_num();
    const BigInt& q = t.get_den();
    return as_sphere_point(make_direction(q * q - p * p, 2 * p * q, 0));
}

std::pair<Rat, Rat> stereo(const SpherePoint& p)
{
    BigInt denom = p.n() - p.dir().z();
    if (sgn(denom) == 0)
        throw PoleSingularity("stereographic projection of the north pole");
    return {make_rat(p.dir().x(), denom), make_rat(p.dir().y(), denom)};
}

SpherePoint stereo_inv(const Rat& a, const Rat& b)
{
    // a = A/D, b = B/D over a common denominator D.
    BigInt D;
    mpz_lcm(D.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    BigInt A = a.get_num() * (D / a.get_den());
    BigInt B = b.get_num() * (D / b.get_den());
    BigInt s = A * A + B * B;
    return as_sphere_point(make_direction(2 * A * D, 2 * B * D, s - D * D));
}

} // namespace ksnull
