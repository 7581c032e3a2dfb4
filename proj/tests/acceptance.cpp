// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds are fixed so every run checks the same instances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <mpfr.h>

#include "ksnull/density.hpp"
#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"
#include "ksnull/sphere.hpp"

using namespace ksnull;

namespace {

const SpherePoint kPole = sphere_point(0, 0, 1);

struct Outcome {
    bool pass;
    std::string detail;
};

std::string slurp(const std::string& name)
{
    std::ifstream in(std::string(KSNULL_DATA_DIR) + "/" + name, std::ios::binary);
    if (!in)
        throw std::runtime_error("missing data file " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool z_odd(const SpherePoint& p) { return mpz_odd_p(p[2].get_mpz_t()) != 0; }

int yes_count(const std::array<SpherePoint, 3>& t)
{
    return static_cast<int>(z_odd(t[0])) + z_odd(t[1]) + z_odd(t[2]);
}

Rat random_rat(std::mt19937_64& rng, long span)
{
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return make_rat(num(rng), den(rng));
}

Word random_word(std::mt19937_64& rng)
{
    Word w;
    int runs = 1 + static_cast<int>(rng() % 6);
    Generator g = rng() % 2 ? Generator::X : Generator::Z;
    for (int i = 0; i < runs; ++i) {
        w.push_back({g, 1 + rng() % 8});
        g = g == Generator::X ? Generator::Z : Generator::X;
    }
    return w;
}

// Rational center on a 2^-40 grid for a real unit vector; the rounding error
// is far below any radius used here.
std::array<Rat, 3> grid_center(const std::array<double, 3>& v)
{
    std::array<Rat, 3> c;
    for (int k = 0; k < 3; ++k)
        c[k] = make_rat(static_cast<long>(std::llround(std::ldexp(v[k], 40))), 1L << 40);
    return c;
}

std::array<double, 3> random_unit(std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    std::array<double, 3> v{g(rng), g(rng), g(rng)};
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& x : v)
        x /= n;
    return v;
}

long double angle_to(const SpherePoint& p, const std::array<Rat, 3>& c)
{
    long double d = 0, n = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        d += static_cast<long double>(p.coord(i).get_d()) * c[i].get_d();
        n += static_cast<long double>(c[i].get_d()) * c[i].get_d();
    }
    return std::acos(std::clamp(d / std::sqrt(n), -1.0L, 1.0L));
}

// 1. z-parity on random rational triads and orthogonal pairs.
Outcome criterion_1()
{
    std::mt19937_64 rng(101);
    std::size_t bad_triads = 0, bad_pairs = 0, not_orth = 0;
    const std::array<SpherePoint, 3> axes{sphere_point(1, 0, 0), sphere_point(0, 1, 0), kPole};
    for (int i = 0; i < 10000; ++i) {
        std::array<SpherePoint, 3> t = axes;
        if (i % 2 == 0) {
            RationalRotation r = word_rotation(random_word(rng));
            for (auto& p : t)
                p = apply(r, p);
        } else {
            SpherePoint u = stereo_inv(random_rat(rng, 60), random_rat(rng, 60));
            SpherePoint v = apply(rotation_to(u), equator_point(random_rat(rng, 60)));
            t = {u, v, as_sphere_point(cross(u.dir(), v.dir()))};
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                not_orth += dot(t[a], t[b]) != 0;
        bad_triads += yes_count(t) != 1;
    }
    for (int i = 0; i < 10000; ++i) {
        SpherePoint u = stereo_inv(random_rat(rng, 60), random_rat(rng, 60));
        RationalRotation r = compose(word_rotation(random_word(rng)), rotation_to(u));
        SpherePoint a = apply(r, kPole);
        SpherePoint b = apply(r, equator_point(random_rat(rng, 60)));
        not_orth += dot(a, b) != 0;
        bad_pairs += z_odd(a) && z_odd(b);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "10000 triads: %zu violations; 10000 pairs: %zu double-Yes; %zu non-orthogonal",
                  bad_triads, bad_pairs, not_orth);
    return {bad_triads == 0 && bad_pairs == 0 && not_orth == 0, buf};
}

// 2. approximate_vector on random targets, both colors.
Outcome criterion_2()
{
    std::mt19937_64 rng(202);
    const Rat eps(1, 100);
    const Rat radius(1, 1000000);
    std::size_t ok = 0, total = 0;
    std::uint64_t longest = 0;
    for (int i = 0; i < 100; ++i) {
        ApproxTarget t = make_target(grid_center(random_unit(rng)), radius, eps);
        for (Color c : {Color::Yes, Color::No}) {
            ++total;
            try {
                ApproxWitness w = approximate_vector(t, c);
                RationalRotation r = word_rotation(w.word);
                if (w.permuted)
                    r = compose(cyclic_permutation(), r);
                bool good = parity_color(w.result) == c && verify_witness(w, t) &&
                            apply(w.rotation, kPole) == w.result &&
                            (w.kind != WitnessKind::Orbit || apply(r, kPole) == w.result) &&
                            angle_to(w.result, t.center) <= eps.get_d();
                ok += good;
                longest = std::max(longest, word_length(w.word));
            } catch (const IterationBudgetExceeded&) {
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu certified witnesses at eps=1/100, radius=1e-6; longest word %llu", ok,
                  total, static_cast<unsigned long long>(longest));
    return {ok == total, buf};
}

// 3. approximate_triad on random orthonormal triads.
Outcome criterion_3()
{
    std::mt19937_64 rng(303);
    const Rat eps(1, 100);
    const Rat radius(1, 1000000);
    std::size_t ok = 0;
    for (int i = 0; i < 100; ++i) {
        auto a = random_unit(rng);
        auto b = random_unit(rng);
        double ab = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        for (int k = 0; k < 3; ++k)
            b[k] -= ab * a[k];
        double nb = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
        for (double& x : b)
            x /= nb;
        std::array<double, 3> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        std::array<ApproxTarget, 3> ts{make_target(grid_center(a), radius, eps), make_target(grid_center(b), radius, eps),
                                       make_target(grid_center(c), radius, eps)};
        try {
            TriadApproximation r = approximate_triad(ts);
            const auto& m = r.triad.members();
            bool good = dot(m[0], m[1]) == 0 && dot(m[0], m[2]) == 0 && dot(m[1], m[2]) == 0 && yes_count(m) == 1;
            for (int k = 0; k < 3; ++k)
                good = good && certified_angle_leq(m[k], ts[k], eps) && angle_to(m[k], ts[k].center) <= eps.get_d();
            ok += good;
        } catch (const Error&) {
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu/100 exactly orthogonal certified triads with one Yes at eps=1/100", ok);
    return {ok == 100, buf};
}

// 4. Peres-33 uncolorable under two branching orders.
Outcome criterion_4()
{
    OrthoGraph g = build_graph(parse_vector_set(slurp("peres33.ks")));
    SearchResult a = search_coloring(g, SearchOptions{ConstraintMode::TriadsAndPairs, BranchOrder::MostConstrained});
    SearchResult b = search_coloring(g, SearchOptions{ConstraintMode::TriadsAndPairs, BranchOrder::StaticNoFirst});
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%zu rays, %zu edges, %zu triads; most-constrained: %s (%llu nodes, trace %016llx); "
                  "static-no-first: %s (%llu nodes, trace %016llx)",
                  g.size(), g.edges.size(), g.triads.size(), a.colorable ? "colorable" : "uncolorable",
                  static_cast<unsigned long long>(a.stats.nodes_expanded),
                  static_cast<unsigned long long>(a.stats.trace_digest), b.colorable ? "colorable" : "uncolorable",
                  static_cast<unsigned long long>(b.stats.nodes_expanded),
                  static_cast<unsigned long long>(b.stats.trace_digest));
    bool distinct = a.stats.trace_digest != b.stats.trace_digest;
    return {!a.colorable && !b.colorable && g.size() == 33 && distinct, buf};
}

// 5. Nullification of Peres-33.
Outcome criterion_5()
{
    VectorSet vs = parse_vector_set(slurp("peres33.ks"));
    const Rat eps(1, 100);
    NullificationReport rep = nullify(vs, eps);
    std::size_t rechecked = 0;
    for (const auto& t : rep.triads) {
        if (!t.approximant)
            continue;
        const auto& m = t.approximant->triad.members();
        bool good = dot(m[0], m[1]) == 0 && dot(m[0], m[2]) == 0 && dot(m[1], m[2]) == 0 && yes_count(m) == 1;
        for (int k = 0; k < 3; ++k) {
            Enclosure e = enclose_unit(vs.vectors[t.members[k]]);
            good = good && certified_angle_leq(m[k], make_target(e.center, e.radius, eps), eps);
        }
        rechecked += good;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu triads, %zu approximated and re-verified, %zu unresolved, %zu violations",
                  rep.triads.size(), rechecked, rep.unresolved, rep.violations);
    return {rep.clean() && rechecked == rep.triads.size() && rep.triads.size() == 16, buf};
}

// 6. search_coloring against brute-force enumeration.
Outcome criterion_6()
{
    std::mt19937_64 rng(606);
    std::vector<QuadVec> pool;
    for (long x = -1; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            for (long z = -2; z <= 2; ++z)
                if ((x || y || z) && gcd3(x, y, z) == 1)
                    pool.push_back({QuadElem::from_int(x, 0, 2), QuadElem::from_int(y, 0, 2), QuadElem::from_int(z, 0, 2)});
    const VectorSet peres = parse_vector_set(slurp("peres33.ks"));
    for (const auto& v : peres.vectors)
        pool.push_back(v);

    std::size_t disagreements = 0, colorable = 0, checks = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<QuadVec> src = pool;
        std::shuffle(src.begin(), src.end(), rng);
        VectorSet s;
        s.field = 2;
        std::size_t want = 1 + rng() % 12;
        for (const auto& v : src) {
            if (s.vectors.size() == want)
                break;
            try {
                add_vector(s, v);
            } catch (const DegenerateInput&) {
            }
        }
        OrthoGraph g = build_graph(s);
        for (ConstraintMode m : {ConstraintMode::Triads, ConstraintMode::TriadsAndPairs}) {
            SearchResult r = search_coloring(g, SearchOptions{m});
            bool oracle = count_colorings(g, m, 1) > 0;
            ++checks;
            colorable += oracle;
            if (r.colorable != oracle || (r.colorable && !verify_coloring(g, *r.coloring, m)))
                ++disagreements;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu comparisons (%zu colorable), %zu disagreements", checks, colorable,
                  disagreements);
    return {disagreements == 0 && checks == 1000, buf};
}

// 7. Exactness regressions.
Outcome criterion_7()
{
    bool gens = true;
    for (const auto& r : {rot_x_35(), rot_z_35()}) {
        const Mat3& m = r.matrix();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rat s = 0;
                for (int k = 0; k < 3; ++k)
                    s += m[k][i] * m[k][j];
                gens = gens && s == (i == j ? 1 : 0);
            }
        Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        gens = gens && det == 1;
    }

    std::size_t orbit_bad = 0;
    auto pts = orbit(200, {Generator::X});
    for (const auto& op : pts)
        orbit_bad += !(op.point[0] == 0 && z_odd(op.point));

    std::size_t files = 0, round_trips = 0;
    for (const char* name : {"axes.ks", "two_triads.ks", "sqrt2_triad.ks", "peres33.ks"}) {
        std::string text = slurp(name);
        std::istringstream is(text);
        std::string line, bare;
        while (std::getline(is, line))
            if (!line.empty() && line[0] != '#')
                bare += line + "\n";
        std::string ser = serialize_vector_set(parse_vector_set(text));
        ++files;
        round_trips += ser == bare && serialize_vector_set(parse_vector_set(ser)) == ser;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "generators exact: %s; X-orbit (%zu points): %zu bad; round-trips %zu/%zu",
                  gens ? "yes" : "no", pts.size(), orbit_bad, round_trips, files);
    return {gens && orbit_bad == 0 && pts.size() == 201 && round_trips == files, buf};
}

// 8. Largest gap among k * arccos(3/5) mod 2pi, k = 1..10^4, with MPFR.
Outcome criterion_8()
{
    const int n = 10000;
    mpfr_t alpha, two_pi, x;
    mpfr_inits2(256, alpha, two_pi, x, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(x, 3, MPFR_RNDN);
    mpfr_div_ui(x, x, 5, MPFR_RNDN);
    mpfr_acos(alpha, x, MPFR_RNDN);
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);

    // Fractions of a full turn, held as 256-bit values and compared exactly.
    std::vector<mpfr_t> pos(n);
    for (int k = 1; k <= n; ++k) {
        mpfr_init2(pos[k - 1], 256);
        mpfr_mul_ui(x, alpha, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_div(x, x, two_pi, MPFR_RNDN);
        mpfr_frac(pos[k - 1], x, MPFR_RNDN);
    }
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return mpfr_less_p(pos[a], pos[b]); });

    mpfr_t gap, best;
    mpfr_inits2(256, gap, best, static_cast<mpfr_ptr>(nullptr));
    // wrap-around gap
    mpfr_ui_sub(best, 1, pos[idx[n - 1]], MPFR_RNDN);
    mpfr_add(best, best, pos[idx[0]], MPFR_RNDN);
    for (int i = 1; i < n; ++i) {
        mpfr_sub(gap, pos[idx[i]], pos[idx[i - 1]], MPFR_RNDN);
        if (mpfr_greater_p(gap, best))
            mpfr_set(best, gap, MPFR_RNDN);
    }
    mpfr_mul(best, best, two_pi, MPFR_RNDN);
    double radians = mpfr_get_d(best, MPFR_RNDU);
    for (auto& p : pos)
        mpfr_clear(p);
    mpfr_clears(alpha, two_pi, x, gap, best, static_cast<mpfr_ptr>(nullptr));

    char buf[128];
    std::snprintf(buf, sizeof buf, "largest gap %.6e rad (limit 1e-2)", radians);
    return {radians < 1e-2, buf};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 z-parity triads and pairs", criterion_1},
        {"2 approximate_vector density", criterion_2},
        {"3 approximate_triad", criterion_3},
        {"4 Peres-33 uncolorable", criterion_4},
        {"5 Peres-33 nullification", criterion_5},
        {"6 search vs enumeration", criterion_6},
        {"7 exactness regressions", criterion_7},
        {"8 equidistribution gap", criterion_8},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), s);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
