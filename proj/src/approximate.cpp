#include <algorithm>
#include <cmath>
#include <numbers>

#include "ksnull/circle_walk.hpp"
#include "ksnull/density.hpp"
#include "ksnull/error.hpp"

namespace ksnull {

namespace {

using Vec3d = std::array<double, 3>;

constexpr double kPi = std::numbers::pi;

Rat abs_rat(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

Vec3d normalized_center(const ApproxTarget& t)
{
    Vec3d c{t.center[0].get_d(), t.center[1].get_d(), t.center[2].get_d()};
    double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    for (double& x : c)
        x /= n;
    return c;
}

// The rational sphere point through the target center, if there is one.
std::optional<SpherePoint> rational_center(const ApproxTarget& t)
{
    BigInt l;
    mpz_lcm(l.get_mpz_t(), t.center[0].get_den_mpz_t(), t.center[1].get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.center[2].get_den_mpz_t());
    std::array<BigInt, 3> c;
    for (std::size_t i = 0; i < 3; ++i)
        c[i] = t.center[i].get_num() * (l / t.center[i].get_den());
    try {
        return as_sphere_point(make_direction(c[0], c[1], c[2]));
    } catch (const Error&) {
        return std::nullopt;
    }
}

Rat tightest_bound(const SpherePoint& p, const ApproxTarget& t)
{
    for (int div : {64, 16, 4, 2}) {
        Rat b = t.eps / div;
        if (certified_angle_leq(p, t, b))
            return b;
    }
    return t.eps;
}

// Z^m X^k applied to (0,0,1):
// (b_k b_m, -b_k a_m, a_k 5^m) / 5^(k+m) with a_j + i b_j = (3+4i)^j.
SpherePoint orbit_point(std::uint64_t k, std::uint64_t m)
{
    auto [ak, bk] = gaussian_power(k);
    auto [am, bm] = gaussian_power(m);
    BigInt p5;
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, m);
    return as_sphere_point(make_direction(bk * bm, -bk * am, ak * p5));
}

Word orbit_word(std::uint64_t k, std::uint64_t m)
{
    Word w;
    if (k > 0)
        w.push_back({Generator::X, k});
    if (m > 0)
        w.push_back({Generator::Z, m});
    return w;
}

RationalRotation orbit_rotation(std::uint64_t k, std::uint64_t m)
{
    return compose(rot_z_35_pow(m), rot_x_35_pow(k));
}

// (x,y,z) -> (z,x,y), i.e. cyclic_permutation() applied to p.
SpherePoint permute(const SpherePoint& p) { return as_sphere_point(make_direction(p[2], p[0], p[1])); }

// Walks candidate words X^k Z^m whose image of the pole should lie within
// `tol` radians of `dir`: k puts the polar angle k*alpha within tol/2 of the
// target's, m then puts the azimuth within tol/2 along the latitude circle.
// Calls accept(k, m) in increasing k and, per k, increasing m; stops at the
// first accepted candidate.
template <class Accept>
bool search_yes(const Vec3d& dir, double tol, std::uint64_t budget, Accept&& accept)
{
    const CircleWalk& walk = CircleWalk::arccos35();
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const double theta = std::acos(std::clamp(dir[2], -1.0, 1.0));
    const double phi = (dir[0] == 0.0 && dir[1] == 0.0) ? 0.0 : std::atan2(dir[1], dir[0]);

    const long double k_half = (tol / 2) / two_pi;
    const double ring = std::min(1.0, std::sin(theta) + tol / 2);
    const long double m_half = ring * kPi <= tol / 2 ? 0.5L : std::min(0.5L, (tol / 2) / ring / two_pi);

    // A: sin(k alpha) > 0, azimuth = m alpha - pi/2.
    // B: sin(k alpha) < 0, azimuth = m alpha + pi/2.
    struct Branch {
        long double k_center;
        long double m_center;
    };
    const std::array<Branch, 2> branches{{
        {theta / two_pi, (phi + kPi / 2) / two_pi},
        {-theta / two_pi, (phi - kPi / 2) / two_pi},
    }};

    std::uint64_t k = 0;
    while (k <= budget) {
        std::optional<std::uint64_t> next;
        for (const auto& b : branches) {
            auto h = walk.first_hit(k, b.k_center, k_half, budget);
            if (h && (!next || *h < *next))
                next = h;
        }
        if (!next)
            return false;
        k = *next;
        for (const auto& b : branches) {
            if (CircleWalk::circular_distance(walk.position(k), b.k_center) > k_half)
                continue;
            std::uint64_t m = 0;
            for (int tries = 0; tries < 3; ++tries) {
                auto mh = walk.first_hit(m, b.m_center, m_half, budget - k);
                if (!mh)
                    break;
                if (accept(k, *mh))
                    return true;
                m = *mh + 1;
            }
        }
        ++k;
    }
    return false;
}

// Continued-fraction convergent of x within tol.
Rat rational_near(long double x, long double tol)
{
    BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    long double r = x;
    for (int i = 0; i < 60; ++i) {
        long double a = std::floor(r);
        BigInt ai(static_cast<long>(a));
        BigInt h = ai * h1 + h2;
        BigInt k = ai * k1 + k2;
        h2 = std::move(h1);
        k2 = std::move(k1);
        h1 = std::move(h);
        k1 = std::move(k);
        long double f = r - a;
        if (std::fabs(static_cast<long double>(h1.get_d()) / static_cast<long double>(k1.get_d()) - x) <= tol || f <= 0)
            break;
        r = 1.0L / f;
    }
    return make_rat(h1, k1);
}

Mat3 mat(std::initializer_list<std::initializer_list<Rat>> rows)
{
    Mat3 m;
    std::size_t i = 0;
    for (auto r : rows) {
        std::size_t j = 0;
        for (const Rat& v : r)
            m[i][j++] = v;
        ++i;
    }
    return m;
}

// Rotation about z with cos = c, sin = s.
RationalRotation rot_z(const Rat& c, const Rat& s) { return RationalRotation(mat({{c, -s, 0}, {s, c, 0}, {0, 0, 1}})); }

// Quarter turns taking (0,0,1) to (1,0,0), (0,1,0) and (0,-1,0).
RationalRotation pole_to_x() { return RationalRotation(mat({{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}})); }
RationalRotation pole_to_y() { return RationalRotation(mat({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}})); }
RationalRotation pole_to_neg_y() { return RationalRotation(mat({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}})); }

ApproxWitness exact_witness(const SpherePoint& p, const ApproxTarget& t)
{
    return ApproxWitness{p, rotation_to(p), WitnessKind::Exact, {}, false, std::nullopt, tightest_bound(p, t)};
}

} // namespace

const char* to_string(WitnessKind k)
{
    switch (k) {
    case WitnessKind::Exact:
        return "exact";
    case WitnessKind::Orbit:
        return "orbit";
    case WitnessKind::Equator:
        return "equator";
    case WitnessKind::CrossProduct:
        return "cross";
    }
    return "?";
}

ApproxTarget make_target(std::array<Rat, 3> center, Rat radius, Rat eps)
{
    if (sgn(eps) <= 0)
        throw DomainError("eps must be positive");
    if (sgn(radius) < 0)
        throw DomainError("enclosure radius must be non-negative");
    if (!(radius < eps / 8))
        throw DomainError("enclosure radius must be below eps/8");
    Rat n2 = center[0] * center[0] + center[1] * center[1] + center[2] * center[2];
    Rat lo = 1 - 2 * radius;
    Rat hi = 1 + 2 * radius;
    if (sgn(lo) > 0 && n2 < lo * lo)
        throw DomainError("target center is too far inside the unit sphere");
    if (n2 > hi * hi)
        throw DomainError("target center is too far outside the unit sphere");
    return ApproxTarget{std::move(center), std::move(radius), std::move(eps)};
}

Rat cos_upper_bound(const Rat& x)
{
    // Partial sums of the cosine series that end on a positive term bound
    // cos from above on the whole real line.
    Rat x2 = x * x;
    Rat term = 1;
    Rat sum = 1;
    const long denominators[] = {2, 12, 30, 56}; // (2k-1)(2k)
    int s = -1;
    for (long d : denominators) {
        term = term * x2 / d;
        sum += s * term;
        s = -s;
    }
    return sum > 1 ? Rat(1) : sum;
}

bool certified_angle_leq(const SpherePoint& p, const ApproxTarget& t, const Rat& bound)
{
    if (sgn(bound) < 0)
        return false;
    if (bound >= Rat(355, 113)) // > pi
        return true;
    Rat c2 = t.center[0] * t.center[0] + t.center[1] * t.center[1] + t.center[2] * t.center[2];
    if (sgn(c2) == 0)
        return false;

    // Box radius as an angle around c: any u in the box has |u - c| <= sqrt(3) r,
    // hence sin angle(u, c) <= delta = sqrt(3) r / |c|. beta certifies
    // asin(delta) <= beta through sin(beta) >= beta - beta^3/6.
    Rat beta = 0;
    if (sgn(t.radius) > 0) {
        Rat delta2 = 3 * t.radius * t.radius / c2;
        if (delta2 >= Rat(1, 4))
            return false;
        beta = Rat(std::asin(std::sqrt(delta2.get_d())) * 1.01);
        for (int i = 0;; ++i) {
            Rat s = beta - beta * beta * beta / 6;
            if (sgn(s) > 0 && s * s >= delta2)
                break;
            if (i == 8)
                return false;
            beta *= 2;
        }
    }
    Rat rest = bound - beta;
    if (sgn(rest) < 0)
        return false;

    // angle(p, c) <= rest  <=  c.p / |c| >= C with C >= cos(rest).
    Rat cp = t.center[0] * p.coord(0) + t.center[1] * p.coord(1) + t.center[2] * p.coord(2);
    Rat cup = cos_upper_bound(rest);
    if (sgn(cup) > 0)
        return sgn(cp) > 0 && cp * cp >= cup * cup * c2;
    return sgn(cp) >= 0 || cp * cp <= cup * cup * c2;
}

bool verify_witness(const ApproxWitness& w, const ApproxTarget& t)
{
    if (!(apply(w.rotation, sphere_point(0, 0, 1)) == w.result))
        return false;
    if (w.certified_angle_bound > t.eps)
        return false;
    return certified_angle_leq(w.result, t, w.certified_angle_bound);
}

ApproxWitness approximate_vector(const ApproxTarget& t, Color color, const ApproxOptions& opts)
{
    if (sgn(t.eps) <= 0)
        throw DomainError("eps must be positive");
    if (auto p = rational_center(t); p && parity_color(*p) == color && certified_angle_leq(*p, t, t.eps))
        return exact_witness(*p, t);

    // No-colored points are Yes points of the permuted problem: P^-1 moves the
    // target, P moves the odd component off the z axis.
    const bool permuted = color == Color::No;
    Vec3d dir = normalized_center(t);
    if (permuted)
        dir = {dir[1], dir[2], dir[0]};

    std::optional<ApproxWitness> found;
    search_yes(dir, t.eps.get_d() / 4, opts.budget, [&](std::uint64_t k, std::uint64_t m) {
        SpherePoint p = orbit_point(k, m);
        if (permuted)
            p = permute(p);
        if (!certified_angle_leq(p, t, t.eps))
            return false;
        RationalRotation r = orbit_rotation(k, m);
        if (permuted)
            r = compose(cyclic_permutation(), r);
        Rat bound = tightest_bound(p, t);
        found.emplace(ApproxWitness{std::move(p), std::move(r), WitnessKind::Orbit, orbit_word(k, m), permuted,
                                    std::nullopt, std::move(bound)});
        return true;
    });
    if (!found)
        throw IterationBudgetExceeded("no " + std::string(to_string(color)) + " point within eps found with word length <= " +
                                      std::to_string(opts.budget));
    return std::move(*found);
}

TriadApproximation approximate_triad(const std::array<ApproxTarget, 3>& targets, const ApproxOptions& opts)
{
    const Rat& eps = targets[0].eps;
    if (sgn(eps) <= 0)
        throw DomainError("eps must be positive");
    if (targets[1].eps != eps || targets[2].eps != eps)
        throw DomainError("triad targets must share eps");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            Rat d = targets[i].center[0] * targets[j].center[0] + targets[i].center[1] * targets[j].center[1] +
                    targets[i].center[2] * targets[j].center[2];
            if (abs_rat(d) > Rat(1, 10))
                throw NotApproximatelyOrthogonal("targets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                 " have center dot product " + to_string(d));
        }

    // Already an exact rational triad within eps.
    {
        std::array<std::optional<SpherePoint>, 3> c{rational_center(targets[0]), rational_center(targets[1]),
                                                    rational_center(targets[2])};
        if (c[0] && c[1] && c[2] && sgn(dot(*c[0], *c[1])) == 0 && sgn(dot(*c[0], *c[2])) == 0 &&
            sgn(dot(*c[1], *c[2])) == 0 && certified_angle_leq(*c[0], targets[0], eps) &&
            certified_angle_leq(*c[1], targets[1], eps) && certified_angle_leq(*c[2], targets[2], eps)) {
            RationalTriad triad(*c[0], *c[1], *c[2]);
            return TriadApproximation{triad,
                                      {exact_witness(*c[0], targets[0]), exact_witness(*c[1], targets[1]),
                                       exact_witness(*c[2], targets[2])}};
        }
    }

    // Search directions: first center, second center Gram-Schmidt corrected
    // against the first.
    Vec3d a = normalized_center(targets[0]);
    Vec3d b = normalized_center(targets[1]);
    double ab = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    for (std::size_t i = 0; i < 3; ++i)
        b[i] -= ab * a[i];
    double bn = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    for (double& x : b)
        x /= bn;

    const double eps_d = eps.get_d();
    std::optional<TriadApproximation> found;
    search_yes(a, eps_d / 4, opts.budget, [&](std::uint64_t k, std::uint64_t m) {
        SpherePoint u = orbit_point(k, m);
        if (!certified_angle_leq(u, targets[0], eps))
            return false;
        RationalRotation q = orbit_rotation(k, m);

        // b in the frame where u is the pole; v must lie on that frame's equator.
        Vec3d bl{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                bl[i] += q(j, i).get_d() * b[j];
        double psi = std::atan2(bl[1], bl[0]);
        const bool flip = std::fabs(psi) > 3 * kPi / 4;
        if (flip)
            psi = psi > 0 ? psi - kPi : psi + kPi;
        Rat tpar = rational_near(std::tan(psi / 2), eps_d * 1e-4);
        const BigInt& pn = tpar.get_num();
        const BigInt& qd = tpar.get_den();
        BigInt h = pn * pn + qd * qd;
        Rat c = make_rat(qd * qd - pn * pn, h);
        Rat s = make_rat(2 * pn * qd, h);
        if (flip) {
            c = -c;
            s = -s;
        }
        RationalRotation frame = compose(q, rot_z(c, s));

        SpherePoint v = apply(frame, sphere_point(1, 0, 0));
        if (!certified_angle_leq(v, targets[1], eps))
            return false;
        SpherePoint w = as_sphere_point(cross(u.dir(), v.dir()));
        Rat side = 0;
        for (std::size_t i = 0; i < 3; ++i)
            side += Rat(w[i]) * targets[2].center[i];
        const bool negate_w = sgn(side) < 0;
        if (negate_w)
            w = -w;
        if (!certified_angle_leq(w, targets[2], eps))
            return false;

        RationalTriad triad(u, v, w);
        Word word = orbit_word(k, m);
        Rat bu = tightest_bound(u, targets[0]);
        Rat bv = tightest_bound(v, targets[1]);
        Rat bw = tightest_bound(w, targets[2]);
        found.emplace(TriadApproximation{
            std::move(triad),
            {ApproxWitness{u, q, WitnessKind::Orbit, word, false, std::nullopt, std::move(bu)},
             ApproxWitness{v, compose(frame, pole_to_x()), WitnessKind::Equator, word, false, tpar, std::move(bv)},
             ApproxWitness{w, compose(frame, negate_w ? pole_to_neg_y() : pole_to_y()), WitnessKind::CrossProduct, word,
                           false, tpar, std::move(bw)}}});
        return true;
    });
    if (!found)
        throw IterationBudgetExceeded("no rational triad within eps found with word length <= " +
                                      std::to_string(opts.budget));
    return std::move(*found);
}

} // namespace ksnull
