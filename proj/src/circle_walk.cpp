#include "ksnull/circle_walk.hpp"

#include <cmath>
#include <limits>

namespace ksnull {

namespace {

long double frac(long double x) { return x - std::floor(x); }

} // namespace

CircleWalk::CircleWalk(long double step) : step_(frac(step))
{
    // Continued fraction denominators; stop once delta is below the
    // resolution of the positions we can compute anyway.
    std::uint64_t q_prev = 0, q = 1;
    long double rest = step_ > 0 ? 1.0L / step_ : 0.0L;
    while (convergents_.size() < 40) {
        long double delta = static_cast<long double>(q) * step_;
        delta -= std::round(delta);
        convergents_.push_back({q, delta});
        if (std::fabs(delta) < 1e-15L || rest == 0.0L)
            break;
        long double a = std::floor(rest);
        std::uint64_t q_next = static_cast<std::uint64_t>(a) * q + q_prev;
        q_prev = q;
        q = q_next;
        long double f = rest - a;
        rest = f < 1e-18L ? 0.0L : 1.0L / f;
    }
}

const CircleWalk& CircleWalk::arccos35()
{
    static const CircleWalk walk(std::acos(0.6L) / (2.0L * 3.141592653589793238462643383279502884L));
    return walk;
}

long double CircleWalk::position(std::uint64_t k) const
{
    return frac(static_cast<long double>(k) * step_);
}

long double CircleWalk::circular_distance(long double a, long double b)
{
    long double d = frac(a - b);
    return d > 0.5L ? 1.0L - d : d;
}

std::optional<std::uint64_t> CircleWalk::first_hit(std::uint64_t start, long double center, long double halfwidth,
                                                   std::uint64_t limit) const
{
    if (start > limit)
        return std::nullopt;
    if (halfwidth >= 0.5L)
        return start;
    auto inside = [&](std::uint64_t k) { return circular_distance(position(k), center) <= halfwidth; };

    // Stride by the first denominator q with |q*step mod 1| < window width:
    // along k, k+q, k+2q, ... the position moves monotonically by delta and
    // cannot jump over the window. Every index >= start lies on one such
    // progression starting in [start, start+q), so the minimum over those
    // progressions is the first hit.
    const long double width = 2.0L * halfwidth;
    const Convergent* stride = nullptr;
    for (const auto& c : convergents_) {
        if (std::fabs(c.delta) < width) {
            stride = &c;
            break;
        }
    }
    if (stride == nullptr) {
        for (std::uint64_t k = start; k <= limit; ++k)
            if (inside(k))
                return k;
        return std::nullopt;
    }

    const std::uint64_t q = stride->q;
    const long double delta = stride->delta;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t r = start; r < start + q && r <= limit && r < best; ++r) {
        long double pos = position(r);
        std::uint64_t cand;
        if (circular_distance(pos, center) <= halfwidth) {
            cand = r;
        } else {
            long double gap = delta > 0 ? frac(center - halfwidth - pos) : frac(pos - center - halfwidth);
            auto steps = static_cast<std::uint64_t>(std::ceil(gap / std::fabs(delta)));
            cand = r + steps * q;
        }
        if (cand < best)
            best = cand;
    }
    // Rounding can put the computed landing a hair outside the window; one
    // more stride moves it inside.
    while (best <= limit && !inside(best))
        best += q;
    if (best > limit)
        return std::nullopt;
    return best;
}

} // namespace ksnull
