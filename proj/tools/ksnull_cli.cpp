// ksnull command-line front end. Every command is batch: read inputs, print a
// report, exit with 0 (success / colorable), 1 (uncolorable), 2 (input
// error) or 3 (budget exhausted).

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ksnull/density.hpp"
#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"
#include "ksnull/report.hpp"
#include "ksnull/sphere.hpp"

using namespace ksnull;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUncolorable = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Color parse_color(const std::string& s)
{
    if (s == "yes")
        return Color::Yes;
    if (s == "no")
        return Color::No;
    throw DomainError("color must be yes or no");
}

std::vector<Generator> parse_generators(const std::string& s)
{
    if (s == "x")
        return {Generator::X};
    if (s == "z")
        return {Generator::Z};
    if (s == "xz")
        return {Generator::X, Generator::Z};
    throw DomainError("generators must be x, z or xz");
}

struct PointRow {
    std::string source;
    SpherePoint point;
};

void emit_points(const std::vector<PointRow>& rows, const std::string& format, std::ostream& os)
{
    if (format == "csv") {
        os << "source,x,y,z,n,xd,yd,zd,color\n";
        for (const auto& r : rows) {
            const auto& p = r.point;
            os << r.source << ',' << p[0] << ',' << p[1] << ',' << p[2] << ',' << p.n() << ','
               << to_decimal(p.coord(0)) << ',' << to_decimal(p.coord(1)) << ',' << to_decimal(p.coord(2)) << ','
               << to_string(parity_color(p)) << '\n';
        }
        return;
    }
    json arr = json::array();
    for (const auto& r : rows) {
        json j = to_json(r.point);
        j["source"] = r.source;
        j["decimal"] = json::array({to_decimal(r.point.coord(0)), to_decimal(r.point.coord(1)),
                                    to_decimal(r.point.coord(2))});
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact z-parity colorings, rational approximation and Kochen-Specker checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    const std::vector<std::string> args(argv, argv + argc);

    // color
    std::vector<std::string> color_xyz;
    bool color_json = false;
    auto* color_cmd = app.add_subcommand("color", "z-parity color of the rational point (x,y,z)/|(x,y,z)|");
    color_cmd->add_option("xyz", color_xyz, "integer components")->expected(3)->required();
    color_cmd->add_flag("--json", color_json, "print a JSON report");

    // approx
    std::string approx_target, approx_radius = "0", approx_eps, approx_color = "yes";
    std::uint64_t approx_budget = ApproxOptions{}.budget;
    auto* approx_cmd = app.add_subcommand("approx", "certified rational approximation of a direction");
    approx_cmd->add_option("--target", approx_target, "center a,b,c as rationals p/q")->required();
    approx_cmd->add_option("--radius", approx_radius, "enclosure radius p/q");
    approx_cmd->add_option("--eps", approx_eps, "angular tolerance p/q (radians)")->required();
    approx_cmd->add_option("--color", approx_color, "yes|no");
    approx_cmd->add_option("--budget", approx_budget, "maximum generator word length");

    // ks-check
    std::string ks_file, ks_mode = "triads+pairs", ks_order = "most-constrained";
    std::uint64_t ks_budget = SearchOptions{}.budget;
    auto* ks_cmd = app.add_subcommand("ks-check", "exhaustive colorability search on a vector-set file");
    ks_cmd->add_option("file", ks_file)->required();
    ks_cmd->add_option("--mode", ks_mode, "triads|triads+pairs");
    ks_cmd->add_option("--order", ks_order, "most-constrained|static-no-first");
    ks_cmd->add_option("--budget", ks_budget, "maximum branching decisions");

    // nullify
    std::string null_file, null_eps;
    std::uint64_t null_budget = ApproxOptions{}.budget;
    auto* null_cmd = app.add_subcommand("nullify", "replace every triad by a certified nearby rational triad");
    null_cmd->add_option("file", null_file)->required();
    null_cmd->add_option("--eps", null_eps, "angular tolerance p/q (radians)")->required();
    null_cmd->add_option("--budget", null_budget, "maximum generator word length per triad");

    // snap
    std::string snap_file, snap_eps;
    std::uint64_t snap_budget = ApproxOptions{}.budget;
    auto* snap_cmd = app.add_subcommand("snap", "snap each vector to a rational point (prints a vector-set file)");
    snap_cmd->add_option("file", snap_file)->required();
    snap_cmd->add_option("--eps", snap_eps, "angular tolerance p/q (radians)")->required();
    snap_cmd->add_option("--budget", snap_budget, "maximum generator word length per vector");

    // orbit
    std::string orbit_gen = "x", orbit_format = "csv";
    std::uint32_t orbit_steps = 0;
    auto* orbit_cmd = app.add_subcommand("orbit", "images of (0,0,1) under generator words");
    orbit_cmd->add_option("--gen", orbit_gen, "x|z|xz");
    orbit_cmd->add_option("--steps", orbit_steps, "maximum word length")->required();
    orbit_cmd->add_option("--format", orbit_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // export
    std::string export_source = "stereo", export_format = "csv";
    std::uint32_t export_size = 4;
    auto* export_cmd = app.add_subcommand("export", "colored rational point cloud for plotting");
    export_cmd->add_option("--source", export_source, "stereo (grid i/N, j/N through stereo_inv) | lattice (Z^m X^k)")
        ->check(CLI::IsMember({"stereo", "lattice"}));
    export_cmd->add_option("--size", export_size, "grid size N");
    export_cmd->add_option("--format", export_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    const auto t0 = Clock::now();
    try {
        if (*color_cmd) {
            SpherePoint p = as_sphere_point(
                make_direction(parse_bigint(color_xyz[0]), parse_bigint(color_xyz[1]), parse_bigint(color_xyz[2])));
            if (color_json)
                std::cout << make_report("color", args, {}, to_json(p), ms_since(t0)).dump(2) << '\n';
            else
                std::cout << (parity_color(p) == Color::Yes ? "Yes" : "No") << ' ' << p.dir().str() << " n=" << p.n()
                          << '\n';
            return kExitOk;
        }

        if (*approx_cmd) {
            auto parts = split_commas(approx_target);
            if (parts.size() != 3)
                throw DomainError("--target needs three comma-separated rationals");
            ApproxTarget t = make_target({parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])},
                                         parse_rat(approx_radius), parse_rat(approx_eps));
            Color c = parse_color(approx_color);
            ApproxWitness w = approximate_vector(t, c, ApproxOptions{approx_budget});
            json results{{"target", to_json(t)}, {"requested_color", to_string(c)}, {"witness", to_json(w)},
                         {"verified", verify_witness(w, t)}};
            std::cout << make_report("approx", args, {}, std::move(results), ms_since(t0)).dump(2) << '\n';
            return kExitOk;
        }

        if (*ks_cmd) {
            std::string text = read_file(ks_file);
            VectorSet vs = parse_vector_set(text);
            OrthoGraph g = build_graph(vs);
            SearchOptions opts;
            opts.mode = parse_mode(ks_mode);
            if (ks_order == "most-constrained")
                opts.order = BranchOrder::MostConstrained;
            else if (ks_order == "static-no-first")
                opts.order = BranchOrder::StaticNoFirst;
            else
                throw DomainError("unknown branch order '" + ks_order + "'");
            opts.budget = ks_budget;
            SearchResult r = search_coloring(g, opts);
            json results = to_json(r, g);
            if (r.coloring)
                results["verified"] = verify_coloring(g, *r.coloring, opts.mode);
            std::cout << make_report("ks-check", args, {{ks_file, sha256_hex(text)}}, std::move(results), ms_since(t0))
                             .dump(2)
                      << '\n';
            return r.colorable ? kExitOk : kExitUncolorable;
        }

        if (*null_cmd) {
            std::string text = read_file(null_file);
            VectorSet vs = parse_vector_set(text);
            OrthoGraph g = build_graph(vs);
            NullificationReport rep = nullify(vs, parse_rat(null_eps), ApproxOptions{null_budget});
            std::cout << make_report("nullify", args, {{null_file, sha256_hex(text)}}, to_json(rep, g), ms_since(t0))
                             .dump(2)
                      << '\n';
            if (!rep.complete())
                return kExitBudget;
            return rep.clean() ? kExitOk : kExitUncolorable;
        }

        if (*snap_cmd) {
            VectorSet vs = parse_vector_set(read_file(snap_file));
            std::cout << serialize_vector_set(snap_vectors(vs, parse_rat(snap_eps), ApproxOptions{snap_budget}));
            return kExitOk;
        }

        if (*orbit_cmd) {
            std::vector<PointRow> rows;
            for (auto& op : orbit(orbit_steps, parse_generators(orbit_gen)))
                rows.push_back({to_string(op.word), std::move(op.point)});
            emit_points(rows, orbit_format, std::cout);
            return kExitOk;
        }

        if (*export_cmd) {
            std::vector<PointRow> rows;
            const long n = export_size;
            if (export_source == "stereo") {
                std::set<std::array<BigInt, 3>> seen;
                if (n == 0)
                    throw DomainError("--size must be positive for the stereo source");
                for (long i = -n; i <= n; ++i)
                    for (long j = -n; j <= n; ++j) {
                        SpherePoint p = stereo_inv(Rat(i, n), Rat(j, n));
                        if (seen.insert(p.dir().components()).second)
                            rows.push_back({"stereo " + to_string(Rat(i, n)) + " " + to_string(Rat(j, n)), p});
                    }
            } else {
                for (long k = 0; k <= n; ++k) {
                    SpherePoint p = sphere_point(0, 0, 1);
                    for (long i = 0; i < k; ++i)
                        p = apply_generator(Generator::X, p);
                    for (long m = 0; m <= n; ++m) {
                        Word w;
                        if (k > 0)
                            w.push_back({Generator::X, static_cast<std::uint64_t>(k)});
                        if (m > 0)
                            w.push_back({Generator::Z, static_cast<std::uint64_t>(m)});
                        rows.push_back({to_string(w), p});
                        p = apply_generator(Generator::Z, p);
                    }
                }
            }
            emit_points(rows, export_format, std::cout);
            return kExitOk;
        }
    } catch (const IterationBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const NotOnRationalSphere& e) {
        std::cerr << "NotOnRationalSphere: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
