#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"

namespace ksnull {

namespace {

// Enclosure narrow enough for make_target's radius < eps/8.
Enclosure enclosure_for(const QuadVec& v, const Rat& eps)
{
    unsigned bits = 64;
    Enclosure e = enclose_unit(v, bits);
    while (!(e.radius < eps / 16)) {
        bits *= 2;
        e = enclose_unit(v, bits);
    }
    return e;
}

ApproxTarget target_for(const QuadVec& v, const Rat& eps)
{
    Enclosure e = enclosure_for(v, eps);
    return make_target(e.center, e.radius, eps);
}

} // namespace

NullificationReport nullify(const VectorSet& vs, const Rat& eps, const ApproxOptions& opts)
{
    if (sgn(eps) <= 0)
        throw DomainError("eps must be positive");
    OrthoGraph g = build_graph(vs);
    if (g.triads.empty())
        throw DomainError("vector set has no triads to nullify");

    NullificationReport report;
    report.eps = eps;
    for (const Triple& t : g.triads) {
        TriadReport tr;
        tr.members = t;
        std::array<ApproxTarget, 3> targets{target_for(vs.vectors[t[0]], eps), target_for(vs.vectors[t[1]], eps),
                                            target_for(vs.vectors[t[2]], eps)};
        try {
            TriadApproximation approx = approximate_triad(targets, opts);
            int yes = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                tr.coloring[i] = parity_color(approx.triad[i]);
                yes += tr.coloring[i] == Color::Yes ? 1 : 0;
            }
            tr.satisfies_constraint = yes == 1;
            if (!tr.satisfies_constraint)
                ++report.violations;
            tr.approximant = std::move(approx);
        } catch (const IterationBudgetExceeded& e) {
            tr.error = e.what();
            ++report.unresolved;
        }
        report.triads.push_back(std::move(tr));
    }
    return report;
}

VectorSet snap_vectors(const VectorSet& vs, const Rat& eps, const ApproxOptions& opts)
{
    if (sgn(eps) <= 0)
        throw DomainError("eps must be positive");
    VectorSet out;
    out.field = vs.field;
    for (const QuadVec& v : vs.vectors) {
        if (rational_sphere_point(v)) {
            out.vectors.push_back(v);
            continue;
        }
        ApproxWitness w = approximate_vector(target_for(v, eps), Color::Yes, opts);
        QuadVec snapped;
        for (std::size_t i = 0; i < 3; ++i)
            snapped[i] = QuadElem(Rat(w.result[i]), Rat(0), vs.field);
        out.vectors.push_back(std::move(snapped));
    }
    // Declared triads survive only where exact orthogonality does.
    for (std::size_t i = 0; i < vs.triads.size(); ++i) {
        const Triple& t = vs.triads[i];
        if (dot3(out.vectors[t[0]], out.vectors[t[1]]).is_zero() &&
            dot3(out.vectors[t[0]], out.vectors[t[2]]).is_zero() &&
            dot3(out.vectors[t[1]], out.vectors[t[2]]).is_zero()) {
            out.triads.push_back(t);
            out.triad_positions.push_back(i < vs.triad_positions.size() ? vs.triad_positions[i] : vs.vectors.size());
        }
    }
    return out;
}

} // namespace ksnull
