#pragma once

#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "ksnull/exact.hpp"

namespace ksnull {

/// Primitive integer triple (gcd 1, not all zero): a point of the rational
/// projective plane, stored with its sign.
class Direction {
public:
    const BigInt& x() const noexcept { return c_[0]; }
    const BigInt& y() const noexcept { return c_[1]; }
    const BigInt& z() const noexcept { return c_[2]; }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }
    const std::array<BigInt, 3>& components() const noexcept { return c_; }

    BigInt norm2() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2]; }

    Direction operator-() const { return Direction(-c_[0], -c_[1], -c_[2]); }

    friend bool operator==(const Direction&, const Direction&) = default;

    /// Equal up to a global sign.
    bool projectively_equal(const Direction& o) const { return *this == o || *this == -o; }

    std::string str() const;

private:
    friend Direction make_direction(const BigInt&, const BigInt&, const BigInt&);
    Direction(BigInt x, BigInt y, BigInt z) : c_{std::move(x), std::move(y), std::move(z)} {}

    std::array<BigInt, 3> c_;
};

/// Divides by gcd3, keeping the given signs. Throws DegenerateInput on zero.
Direction make_direction(const BigInt& x, const BigInt& y, const BigInt& z);

/// Rational unit vector dir / n with n*n == |dir|^2.
/// Exactly one component of dir is odd; this is checked on construction.
class SpherePoint {
public:
    const Direction& dir() const noexcept { return dir_; }
    const BigInt& n() const noexcept { return n_; }
    const BigInt& operator[](std::size_t i) const { return dir_[i]; }

    /// Component i as an exact rational.
    Rat coord(std::size_t i) const { return make_rat(dir_[i], n_); }
    std::array<double, 3> to_double() const;

    SpherePoint operator-() const { return SpherePoint(-dir_, n_); }

    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
    bool projectively_equal(const SpherePoint& o) const { return dir_.projectively_equal(o.dir_); }

    std::string str() const;

private:
    friend SpherePoint as_sphere_point(const Direction&);
    SpherePoint(Direction d, BigInt n) : dir_(std::move(d)), n_(std::move(n)) {}

    Direction dir_;
    BigInt n_;
};

/// Throws NotOnRationalSphere when |d|^2 is not a perfect square.
SpherePoint as_sphere_point(const Direction& d);
SpherePoint sphere_point(long x, long y, long z);

enum class Color { No = 0, Yes = 1 };

const char* to_string(Color c);
std::ostream& operator<<(std::ostream& os, Color c);

/// Yes iff the z component of the primitive representative is odd.
Color parity_color(const SpherePoint& p);

BigInt dot(const Direction& a, const Direction& b);
inline BigInt dot(const SpherePoint& a, const SpherePoint& b) { return dot(a.dir(), b.dir()); }

/// Primitive cross product. Throws DegenerateInput for parallel inputs.
Direction cross(const Direction& a, const Direction& b);

/// Three pairwise orthogonal rational unit vectors; w is parallel to u x v.
class RationalTriad {
public:
    /// Validates the invariants. Throws NotOrthogonal.
    RationalTriad(SpherePoint u, SpherePoint v, SpherePoint w);

    const SpherePoint& u() const noexcept { return m_[0]; }
    const SpherePoint& v() const noexcept { return m_[1]; }
    const SpherePoint& w() const noexcept { return m_[2]; }
    const SpherePoint& operator[](std::size_t i) const { return m_[i]; }
    const std::array<SpherePoint, 3>& members() const noexcept { return m_; }

private:
    std::array<SpherePoint, 3> m_;
};

/// Completes u, v with the primitive cross product. Throws NotOrthogonal.
RationalTriad make_triad(const SpherePoint& u, const SpherePoint& v);

/// Colors of the three members; exactly one is Yes (asserted).
std::array<Color, 3> triad_coloring(const RationalTriad& t);

/// ((q^2 - p^2), 2pq, 0) / (p^2 + q^2) for t = p/q, reduced.
SpherePoint equator_point(const Rat& t);

/// Projection from the north pole (0,0,1) onto the z = 0 plane.
/// Throws PoleSingularity at the north pole.
std::pair<Rat, Rat> stereo(const SpherePoint& p);
SpherePoint stereo_inv(const Rat& a, const Rat& b);

} // namespace ksnull
