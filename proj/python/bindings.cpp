#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ksnull/density.hpp"
#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"
#include "ksnull/report.hpp"

namespace py = pybind11;
using namespace ksnull;

// Exact numbers cross the boundary as decimal strings ("p" or "p/q"); the
// Python wrapper converts to int / Fraction. Structured results travel as
// the same JSON the CLI prints.

namespace {

Color color_arg(const std::string& s)
{
    if (s == "yes")
        return Color::Yes;
    if (s == "no")
        return Color::No;
    throw DomainError("color must be 'yes' or 'no'");
}

std::array<Rat, 3> rat3(const std::array<std::string, 3>& s)
{
    return {parse_rat(s[0]), parse_rat(s[1]), parse_rat(s[2])};
}

std::string sphere_point_json(const std::string& x, const std::string& y, const std::string& z)
{
    return to_json(as_sphere_point(make_direction(parse_bigint(x), parse_bigint(y), parse_bigint(z)))).dump();
}

std::string approximate_vector_json(const std::array<std::string, 3>& center, const std::string& radius,
                                    const std::string& eps, const std::string& color, std::uint64_t budget)
{
    ApproxTarget t = make_target(rat3(center), parse_rat(radius), parse_rat(eps));
    const Color c = color_arg(color);
    ApproxWitness w = [&] {
        py::gil_scoped_release release;
        return approximate_vector(t, c, ApproxOptions{budget});
    }();
    json j = to_json(w);
    j["verified"] = verify_witness(w, t);
    return j.dump();
}

std::string approximate_triad_json(const std::array<std::array<std::string, 3>, 3>& centers,
                                   const std::string& radius, const std::string& eps, std::uint64_t budget)
{
    std::array<ApproxTarget, 3> ts;
    for (int i = 0; i < 3; ++i)
        ts[i] = make_target(rat3(centers[i]), parse_rat(radius), parse_rat(eps));
    py::gil_scoped_release release;
    return to_json(approximate_triad(ts, ApproxOptions{budget})).dump();
}

std::string orbit_json(std::uint32_t steps, const std::string& gens)
{
    std::vector<Generator> g;
    for (char c : gens) {
        if (c == 'x' || c == 'X')
            g.push_back(Generator::X);
        else if (c == 'z' || c == 'Z')
            g.push_back(Generator::Z);
        else
            throw DomainError("generators must be drawn from 'x' and 'z'");
    }
    json out = json::array();
    for (const auto& op : orbit(steps, g)) {
        json p = to_json(op.point);
        p["word"] = to_string(op.word);
        out.push_back(std::move(p));
    }
    return out.dump();
}

std::string ks_check_json(const std::string& text, const std::string& mode, const std::string& order,
                          std::uint64_t budget)
{
    OrthoGraph g = build_graph(parse_vector_set(text));
    SearchOptions opts;
    opts.mode = parse_mode(mode);
    if (order == "most-constrained")
        opts.order = BranchOrder::MostConstrained;
    else if (order == "static-no-first")
        opts.order = BranchOrder::StaticNoFirst;
    else
        throw DomainError("unknown branch order '" + order + "'");
    opts.budget = budget;
    SearchResult r;
    {
        py::gil_scoped_release release;
        r = search_coloring(g, opts);
    }
    return to_json(r, g).dump();
}

std::string nullify_json(const std::string& text, const std::string& eps, std::uint64_t budget)
{
    VectorSet vs = parse_vector_set(text);
    OrthoGraph g = build_graph(vs);
    py::gil_scoped_release release;
    return to_json(nullify(vs, parse_rat(eps), ApproxOptions{budget}), g).dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact z-parity colorings, rational approximation and Kochen-Specker checks";
    m.attr("__version__") = kVersion;

    static py::exception<Error> base(m, "KsnullError", PyExc_ValueError);
    static py::exception<Error> budget(m, "BudgetError", base.ptr());
    static py::exception<Error> sphere(m, "NotOnRationalSphere", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            PyErr_SetString(budget.ptr(), e.what());
        } catch (const IterationBudgetExceeded& e) {
            PyErr_SetString(budget.ptr(), e.what());
        } catch (const NotOnRationalSphere& e) {
            PyErr_SetString(sphere.ptr(), e.what());
        } catch (const Error& e) {
            PyErr_SetString(base.ptr(), e.what());
        }
    });

    m.def("sphere_point", &sphere_point_json, py::arg("x"), py::arg("y"), py::arg("z"),
          "Primitive triple, norm and z-parity color of (x, y, z) as JSON.");
    m.def("approximate_vector", &approximate_vector_json, py::arg("center"), py::arg("radius"), py::arg("eps"),
          py::arg("color"), py::arg("budget") = ApproxOptions{}.budget);
    m.def("approximate_triad", &approximate_triad_json, py::arg("centers"), py::arg("radius"), py::arg("eps"),
          py::arg("budget") = ApproxOptions{}.budget);
    m.def("orbit", &orbit_json, py::arg("steps"), py::arg("generators") = "x");
    m.def("ks_check", &ks_check_json, py::arg("text"), py::arg("mode") = "triads+pairs",
          py::arg("order") = "most-constrained", py::arg("budget") = SearchOptions{}.budget);
    m.def("nullify", &nullify_json, py::arg("text"), py::arg("eps"), py::arg("budget") = ApproxOptions{}.budget);
    m.def(
        "snap", [](const std::string& text, const std::string& eps, std::uint64_t budget) {
            return serialize_vector_set(snap_vectors(parse_vector_set(text), parse_rat(eps), ApproxOptions{budget}));
        },
        py::arg("text"), py::arg("eps"), py::arg("budget") = ApproxOptions{}.budget);
    m.def(
        "serialize", [](const std::string& text) { return serialize_vector_set(parse_vector_set(text)); },
        py::arg("text"), "Canonical form of a vector-set file.");
    m.def(
        "to_decimal", [](const std::string& q, int digits) { return to_decimal(parse_rat(q), digits); },
        py::arg("value"), py::arg("digits") = 12);
}
