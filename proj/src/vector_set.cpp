#include <algorithm>
#include <set>
#include <sstream>

#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"

namespace ksnull {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

QuadElem parse_component(std::string_view tok, long d, std::size_t line)
{
    auto colon = tok.find(':');
    if (colon == std::string_view::npos)
        throw ParseError(line, "component '" + std::string(tok) + "' is not of the form a:b");
    BigInt a, b;
    try {
        a = parse_bigint(tok.substr(0, colon));
        b = parse_bigint(tok.substr(colon + 1));
    } catch (const DomainError& e) {
        throw ParseError(line, e.what());
    }
    if (d == 1 && sgn(b) != 0)
        throw FieldMismatch("line " + std::to_string(line) + ": sqrt part given in field 1");
    return QuadElem(Rat(a), Rat(b), d);
}

std::size_t parse_index(std::string_view tok, std::size_t count, std::size_t line)
{
    BigInt i;
    try {
        i = parse_bigint(tok);
    } catch (const DomainError& e) {
        throw ParseError(line, e.what());
    }
    if (i < 1 || i > count)
        throw ParseError(line, "triad index " + std::string(tok) + " does not name an earlier vector");
    return i.get_ui() - 1;
}

std::string component_text(const QuadElem& q)
{
    if (q.a().get_den() != 1 || q.b().get_den() != 1)
        throw DomainError("vector-set files hold integer components only");
    return q.a().get_num().get_str() + ":" + q.b().get_num().get_str();
}

bool mutually_orthogonal(const VectorSet& vs, const Triple& t)
{
    return dot3(vs.vectors[t[0]], vs.vectors[t[1]]).is_zero() && dot3(vs.vectors[t[0]], vs.vectors[t[2]]).is_zero() &&
           dot3(vs.vectors[t[1]], vs.vectors[t[2]]).is_zero();
}

} // namespace

bool projectively_equal(const QuadVec& a, const QuadVec& b)
{
    return !is_zero(a) && !is_zero(b) && is_zero(cross3(a, b));
}

void add_vector(VectorSet& vs, const QuadVec& v)
{
    for (const auto& c : v)
        if (c.field() != vs.field)
            throw FieldMismatch("component field " + std::to_string(c.field()) + " in a field " +
                                std::to_string(vs.field) + " set");
    if (is_zero(v))
        throw DegenerateInput("zero vector");
    for (std::size_t i = 0; i < vs.vectors.size(); ++i)
        if (projectively_equal(vs.vectors[i], v))
            throw DegenerateInput("duplicate ray of " + vs.label(i));
    vs.vectors.push_back(v);
}

VectorSet parse_vector_set(std::string_view text)
{
    VectorSet vs;
    bool have_field = false;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#')
            continue;

        if (tok[0] == "field") {
            if (have_field)
                throw ParseError(lineno, "duplicate field header");
            if (tok.size() != 2)
                throw ParseError(lineno, "expected 'field <d>'");
            BigInt d;
            try {
                d = parse_bigint(tok[1]);
            } catch (const DomainError& e) {
                throw ParseError(lineno, e.what());
            }
            if (d < 1 || !d.fits_slong_p() || !is_square_free(d.get_si()))
                throw ParseError(lineno, "field must be a square-free integer >= 1");
            vs.field = d.get_si();
            have_field = true;
            continue;
        }
        if (!have_field)
            throw ParseError(lineno, "expected 'field <d>' before any data");

        if (tok[0] == "v") {
            if (tok.size() != 4)
                throw ParseError(lineno, "expected 'v <a:b> <a:b> <a:b>'");
            QuadVec v{parse_component(tok[1], vs.field, lineno), parse_component(tok[2], vs.field, lineno),
                      parse_component(tok[3], vs.field, lineno)};
            try {
                add_vector(vs, v);
            } catch (const DegenerateInput& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (tok[0] == "T") {
            if (tok.size() != 4)
                throw ParseError(lineno, "expected 'T <i> <j> <k>'");
            Triple t{parse_index(tok[1], vs.vectors.size(), lineno), parse_index(tok[2], vs.vectors.size(), lineno),
                     parse_index(tok[3], vs.vectors.size(), lineno)};
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
                throw ParseError(lineno, "triad repeats a vector");
            if (!mutually_orthogonal(vs, t))
                throw NonOrthogonalDeclaredTriad("line " + std::to_string(lineno) + ": declared triad is not orthogonal");
            vs.triads.push_back(t);
            vs.triad_positions.push_back(vs.vectors.size());
        } else {
            throw ParseError(lineno, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_field)
        throw ParseError(lineno, "missing 'field <d>' header");
    return vs;
}

std::string serialize_vector_set(const VectorSet& vs)
{
    std::ostringstream os;
    os << "field " << vs.field << '\n';
    std::size_t next_triad = 0;
    auto flush_triads = [&](std::size_t emitted) {
        while (next_triad < vs.triads.size() &&
               (next_triad >= vs.triad_positions.size() ? emitted == vs.vectors.size()
                                                        : vs.triad_positions[next_triad] <= emitted)) {
            const auto& t = vs.triads[next_triad++];
            os << "T " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
        }
    };
    flush_triads(0);
    for (std::size_t i = 0; i < vs.vectors.size(); ++i) {
        const auto& v = vs.vectors[i];
        os << "v " << component_text(v[0]) << ' ' << component_text(v[1]) << ' ' << component_text(v[2]) << '\n';
        flush_triads(i + 1);
    }
    return os.str();
}

OrthoGraph build_graph(const VectorSet& vs)
{
    OrthoGraph g;
    const std::size_t n = vs.vectors.size();
    for (std::size_t i = 0; i < n; ++i)
        g.labels.push_back(vs.label(i));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dot3(vs.vectors[i], vs.vectors[j]).is_zero()) {
                adj[i][j] = adj[j][i] = true;
                g.edges.emplace_back(i, j);
            }
    std::set<Triple> triads;
    for (const auto& [i, j] : g.edges)
        for (std::size_t k = j + 1; k < n; ++k)
            if (adj[i][k] && adj[j][k])
                triads.insert({i, j, k});
    for (Triple t : vs.triads) {
        std::sort(t.begin(), t.end());
        triads.insert(t);
    }
    g.triads.assign(triads.begin(), triads.end());
    return g;
}

std::optional<SpherePoint> rational_sphere_point(const QuadVec& v)
{
    for (const auto& c : v)
        if (!c.is_rational())
            return std::nullopt;
    BigInt l;
    mpz_lcm(l.get_mpz_t(), v[0].a().get_den_mpz_t(), v[1].a().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[2].a().get_den_mpz_t());
    std::array<BigInt, 3> c;
    for (std::size_t i = 0; i < 3; ++i)
        c[i] = v[i].a().get_num() * (l / v[i].a().get_den());
    try {
        return as_sphere_point(make_direction(c[0], c[1], c[2]));
    } catch (const NotOnRationalSphere&) {
        return std::nullopt;
    }
}

} // namespace ksnull
