#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ksnull {

/// Positions {k * step} on the circle R/Z for an irrational step, with a
/// window search that strides by continued-fraction denominators instead of
/// visiting every k. All positions and widths are in turns.
///
/// Floating point is used only to *propose* indices; every caller re-checks
/// its candidate exactly.
class CircleWalk {
public:
    struct Convergent {
        std::uint64_t q;
        /// q * step - round(q * step); |delta| shrinks with q.
        long double delta;
    };

    explicit CircleWalk(long double step);

    /// The walk generated by arccos(3/5) / (2 pi).
    static const CircleWalk& arccos35();

    long double step() const noexcept { return step_; }
    const std::vector<Convergent>& convergents() const noexcept { return convergents_; }

    /// Fractional part of k * step.
    long double position(std::uint64_t k) const;

    /// Smallest k in [start, limit] whose position lies within `halfwidth`
    /// of `center` (circular distance), or nullopt.
    std::optional<std::uint64_t> first_hit(std::uint64_t start, long double center, long double halfwidth,
                                           std::uint64_t limit) const;

    static long double circular_distance(long double a, long double b);

private:
    long double step_;
    std::vector<Convergent> convergents_;
};

} // namespace ksnull
