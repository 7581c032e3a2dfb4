#include <sstream>

#include "ksnull/density.hpp"
#include "ksnull/error.hpp"

namespace ksnull {

namespace {

Mat3 transpose(const Mat3& m)
{
    Mat3 t;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            t[i][j] = m[j][i];
    return t;
}

bool is_identity(const Mat3& m)
{
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (m[i][j] != (i == j ? 1 : 0))
                return false;
    return true;
}

BigInt pow5(std::uint64_t k)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 5, k);
    return p;
}

Mat3 ints(std::initializer_list<std::initializer_list<long>> rows)
{
    Mat3 m;
    std::size_t i = 0;
    for (auto r : rows) {
        std::size_t j = 0;
        for (long v : r)
            m[i][j++] = v;
        ++i;
    }
    return m;
}

} // namespace

std::pair<BigInt, BigInt> gaussian_power(std::uint64_t k)
{
    BigInt re = 1, im = 0;
    BigInt bre = 3, bim = 4;
    while (k > 0) {
        if (k & 1) {
            BigInt r = re * bre - im * bim;
            im = re * bim + im * bre;
            re = std::move(r);
        }
        k >>= 1;
        if (k > 0) {
            BigInt r = bre * bre - bim * bim;
            bim = 2 * bre * bim;
            bre = std::move(r);
        }
    }
    return {re, im};
}

Mat3 multiply(const Mat3& a, const Mat3& b)
{
    Mat3 c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k < 3; ++k)
                s += a[i][k] * b[k][j];
            c[i][j] = std::move(s);
        }
    return c;
}

Rat determinant(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RationalRotation::RationalRotation(Mat3 m) : m_(std::move(m))
{
    if (!is_identity(multiply(ksnull::transpose(m_), m_)))
        throw DomainError("matrix is not exactly orthogonal");
    if (determinant(m_) != 1)
        throw DomainError("orthogonal matrix has determinant -1");
}

RationalRotation RationalRotation::identity() { return RationalRotation(ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Unchecked{}); }

RationalRotation RationalRotation::transpose() const { return RationalRotation(ksnull::transpose(m_), Unchecked{}); }

RationalRotation compose(const RationalRotation& r1, const RationalRotation& r2)
{
    return RationalRotation(multiply(r1.m_, r2.m_), RationalRotation::Unchecked{});
}

RationalRotation rot_x_35_pow(std::uint64_t k)
{
    auto [re, im] = gaussian_power(k);
    BigInt den = pow5(k);
    Rat c = make_rat(re, den), s = make_rat(im, den);
    Mat3 m = ints({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    m[1][1] = c;
    m[1][2] = -s;
    m[2][1] = s;
    m[2][2] = c;
    return RationalRotation(std::move(m));
}

RationalRotation rot_z_35_pow(std::uint64_t k)
{
    auto [re, im] = gaussian_power(k);
    BigInt den = pow5(k);
    Rat c = make_rat(re, den), s = make_rat(im, den);
    Mat3 m = ints({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    m[0][0] = c;
    m[0][1] = -s;
    m[1][0] = s;
    m[1][1] = c;
    return RationalRotation(std::move(m));
}

RationalRotation rot_x_35() { return rot_x_35_pow(1); }
RationalRotation rot_z_35() { return rot_z_35_pow(1); }

RationalRotation cyclic_permutation() { return RationalRotation(ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})); }

SpherePoint apply(const RationalRotation& r, const SpherePoint& p)
{
    std::array<Rat, 3> v;
    for (std::size_t i = 0; i < 3; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < 3; ++j)
            s += r(i, j) * Rat(p[j]);
        v[i] = std::move(s);
    }
    BigInt l;
    mpz_lcm(l.get_mpz_t(), v[0].get_den_mpz_t(), v[1].get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[2].get_den_mpz_t());
    std::array<BigInt, 3> c;
    for (std::size_t i = 0; i < 3; ++i)
        c[i] = v[i].get_num() * (l / v[i].get_den());
    return as_sphere_point(make_direction(c[0], c[1], c[2]));
}

RationalRotation rotation_to(const SpherePoint& p)
{
    if (p.dir().x() == 0 && p.dir().y() == 0)
        return p.dir().z() > 0 ? RationalRotation::identity()
                               : RationalRotation(ints({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
    // Householder reflection H swapping e3 and p, composed with a reflection
    // that fixes e3: R = H * diag(-1, 1, 1).
    std::array<Rat, 3> w{-p.coord(0), -p.coord(1), Rat(1) - p.coord(2)};
    Rat ww = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    Mat3 h;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            h[i][j] = Rat(i == j ? 1 : 0) - 2 * w[i] * w[j] / ww;
    for (std::size_t i = 0; i < 3; ++i)
        h[i][0] = -h[i][0];
    return RationalRotation(std::move(h));
}

std::string to_string(const Word& w)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& run : w) {
        if (!first)
            os << ' ';
        first = false;
        os << (run.gen == Generator::X ? 'X' : 'Z');
        if (run.power != 1)
            os << '^' << run.power;
    }
    return os.str();
}

Word parse_word(std::string_view text)
{
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok[0] != 'X' && tok[0] != 'Z')
            throw DomainError("bad generator in word '" + std::string(text) + "'");
        WordRun run{tok[0] == 'X' ? Generator::X : Generator::Z, 1};
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3 || tok.find_first_not_of("0123456789", 2) != std::string::npos)
                throw DomainError("bad generator power in word '" + std::string(text) + "'");
            run.power = std::stoull(tok.substr(2));
        }
        if (run.power == 0)
            continue;
        if (!w.empty() && w.back().gen == run.gen)
            w.back().power += run.power;
        else
            w.push_back(run);
    }
    return w;
}

std::uint64_t word_length(const Word& w)
{
    std::uint64_t n = 0;
    for (const auto& r : w)
        n += r.power;
    return n;
}

RationalRotation word_rotation(const Word& w)
{
    RationalRotation r = RationalRotation::identity();
    for (const auto& run : w)
        r = compose(run.gen == Generator::X ? rot_x_35_pow(run.power) : rot_z_35_pow(run.power), r);
    return r;
}

SpherePoint apply_generator(Generator g, const SpherePoint& p)
{
    const BigInt& x = p[0];
    const BigInt& y = p[1];
    const BigInt& z = p[2];
    // Numerators over 5n; make_direction strips any common factor.
    if (g == Generator::X)
        return as_sphere_point(make_direction(5 * x, 3 * y - 4 * z, 4 * y + 3 * z));
    return as_sphere_point(make_direction(3 * x - 4 * y, 4 * x + 3 * y, 5 * z));
}

std::vector<OrbitPoint> orbit(std::uint32_t word_length, const std::vector<Generator>& generators)
{
    std::vector<Generator> gens;
    for (Generator g : {Generator::X, Generator::Z})
        for (Generator h : generators)
            if (g == h) {
                gens.push_back(g);
                break;
            }
    if (gens.size() > 1 && word_length > 20)
        throw TooLarge("two-generator orbit limited to word length 20");

    std::vector<OrbitPoint> out;
    out.push_back({{}, sphere_point(0, 0, 1)});
    if (gens.empty())
        return out;
    // Breadth-first over the word tree gives shortlex order.
    std::size_t level_begin = 0;
    for (std::uint32_t len = 1; len <= word_length; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (Generator g : gens) {
                Word w = out[i].word;
                if (!w.empty() && w.back().gen == g)
                    ++w.back().power;
                else
                    w.push_back({g, 1});
                SpherePoint p = apply_generator(g, out[i].point);
                out.push_back({std::move(w), std::move(p)});
            }
        }
        level_begin = level_end;
    }
    return out;
}

} // namespace ksnull
