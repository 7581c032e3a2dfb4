#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksnull/exact.hpp"
#include "ksnull/sphere.hpp"

namespace ksnull {

using Mat3 = std::array<std::array<Rat, 3>, 3>;

/// Exactly orthogonal rational matrix with determinant 1.
class RationalRotation {
public:
    /// Checks R^T R = I and det R = 1 exactly. Throws DomainError.
    explicit RationalRotation(Mat3 m);

    static RationalRotation identity();

    const Mat3& matrix() const noexcept { return m_; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }

    RationalRotation transpose() const;

    friend bool operator==(const RationalRotation&, const RationalRotation&) = default;

private:
    struct Unchecked {};
    RationalRotation(Mat3 m, Unchecked) : m_(std::move(m)) {}
    friend RationalRotation compose(const RationalRotation&, const RationalRotation&);

    Mat3 m_;
};

/// Rotation by arccos(3/5) about +x: rows (1,0,0), (0,3/5,-4/5), (0,4/5,3/5).
RationalRotation rot_x_35();
/// Rotation by arccos(3/5) about +z.
RationalRotation rot_z_35();
/// (3 + 4i)^k as (re, im). re/5^k and im/5^k are cos and sin of k*arccos(3/5);
/// neither part is divisible by 5.
std::pair<BigInt, BigInt> gaussian_power(std::uint64_t k);

/// k-fold power of rot_x_35 / rot_z_35, built from (3+4i)^k.
RationalRotation rot_x_35_pow(std::uint64_t k);
RationalRotation rot_z_35_pow(std::uint64_t k);

/// Cyclic coordinate permutation (x,y,z) -> (z,x,y); maps (0,0,1) to (1,0,0).
RationalRotation cyclic_permutation();

/// Matrix product r1 * r2 (r2 acts first).
RationalRotation compose(const RationalRotation& r1, const RationalRotation& r2);

Mat3 multiply(const Mat3& a, const Mat3& b);
Rat determinant(const Mat3& m);

SpherePoint apply(const RationalRotation& r, const SpherePoint& p);

/// Some rational rotation taking (0,0,1) to p (product of two reflections).
RationalRotation rotation_to(const SpherePoint& p);

enum class Generator { X, Z };

/// A generator applied `power` times in a row.
struct WordRun {
    Generator gen;
    std::uint64_t power;
    friend bool operator==(const WordRun&, const WordRun&) = default;
};

/// Generator word, read left to right in application order: "X^2 Z" applies
/// X twice and then Z to the pole.
using Word = std::vector<WordRun>;

std::string to_string(const Word& w);
/// Parses the to_string form ("" for the empty word). Throws DomainError.
Word parse_word(std::string_view text);
std::uint64_t word_length(const Word& w);
/// Product of the generator powers in application order.
RationalRotation word_rotation(const Word& w);

/// One application of a generator to a rational sphere point.
SpherePoint apply_generator(Generator g, const SpherePoint& p);

struct OrbitPoint {
    Word word;
    SpherePoint point;
};

/// Images of (0,0,1) under every word of length <= word_length over the
/// given generators, in shortlex order (X before Z). Two-generator orbits
/// grow as 2^L and are limited to word_length <= 20 (TooLarge otherwise).
std::vector<OrbitPoint> orbit(std::uint32_t word_length, const std::vector<Generator>& generators);

/// Target direction known up to an axis-aligned box: each true component lies
/// within `radius` of the rational center. eps is the angular tolerance in
/// radians.
struct ApproxTarget {
    std::array<Rat, 3> center;
    Rat radius;
    Rat eps;
};

/// Validates eps > 0, 0 <= radius < eps/8 and |center| within 2*radius of 1.
/// Throws DomainError.
ApproxTarget make_target(std::array<Rat, 3> center, Rat radius, Rat eps);

/// True only if every unit vector in the target's box is within `bound`
/// radians of p. Exact rational arithmetic; may return false when the true
/// answer is true, never the reverse.
bool certified_angle_leq(const SpherePoint& p, const ApproxTarget& t, const Rat& bound);

/// Rational upper bound on cos(x), valid for every real x.
Rat cos_upper_bound(const Rat& x);

enum class WitnessKind {
    Exact,        ///< target was already an admissible rational point
    Orbit,        ///< pole image under a generator word (maybe permuted)
    Equator,      ///< orbit rotation applied to a rational equator point
    CrossProduct, ///< cross product of the other two members of a triad
};

const char* to_string(WitnessKind k);

struct ApproxWitness {
    SpherePoint result;
    /// Exact rotation with rotation * (0,0,1) == result.
    RationalRotation rotation;
    WitnessKind kind = WitnessKind::Orbit;
    /// Generator word of the orbit part of the construction.
    Word word;
    /// The orbit point was moved by cyclic_permutation() (No-colored result).
    bool permuted = false;
    /// Equator parameter t for Equator / CrossProduct witnesses.
    std::optional<Rat> equator_parameter;
    /// Smallest bound among eps/64, eps/16, eps/4, eps/2, eps that certifies.
    Rat certified_angle_bound;
};

struct ApproxOptions {
    /// Longest admissible generator word.
    std::uint64_t budget = 20000;
};

/// A rational sphere point of the requested color within eps of the target.
/// Throws IterationBudgetExceeded.
ApproxWitness approximate_vector(const ApproxTarget& t, Color color, const ApproxOptions& opts = {});

/// Re-checks a witness from scratch: rotation * pole == result, the bound is
/// at most eps and certified_angle_leq passes.
bool verify_witness(const ApproxWitness& w, const ApproxTarget& t);

struct TriadApproximation {
    RationalTriad triad;
    std::array<ApproxWitness, 3> witnesses;
};

/// Exactly orthogonal rational triad with each member certified within eps of
/// its target. Targets must share eps and have centers pairwise orthogonal to
/// within 1/10. Throws NotApproximatelyOrthogonal, IterationBudgetExceeded.
TriadApproximation approximate_triad(const std::array<ApproxTarget, 3>& targets, const ApproxOptions& opts = {});

} // namespace ksnull
