#include <cstdio>
#include <ctime>

#include <openssl/evp.h>

#include "ksnull/error.hpp"
#include "ksnull/report.hpp"

namespace ksnull {

std::string sha256_hex(std::string_view bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

namespace {

BigInt int_from(const json& j) { return parse_bigint(j.get<std::string>()); }
Rat rat_from(const json& j) { return parse_rat(j.get<std::string>()); }

Color color_from(const json& j)
{
    auto s = j.get<std::string>();
    if (s == "yes")
        return Color::Yes;
    if (s == "no")
        return Color::No;
    throw DomainError("bad color '" + s + "'");
}

WitnessKind kind_from(const std::string& s)
{
    for (WitnessKind k : {WitnessKind::Exact, WitnessKind::Orbit, WitnessKind::Equator, WitnessKind::CrossProduct})
        if (s == to_string(k))
            return k;
    throw DomainError("bad witness kind '" + s + "'");
}

json triple_labels(const Triple& t, const OrthoGraph& g)
{
    return json::array({g.labels[t[0]], g.labels[t[1]], g.labels[t[2]]});
}

std::string hex64(std::uint64_t x)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

} // namespace

json to_json(const SpherePoint& p)
{
    return json{{"x", p[0].get_str()},
                {"y", p[1].get_str()},
                {"z", p[2].get_str()},
                {"n", p.n().get_str()},
                {"color", to_string(parity_color(p))}};
}

SpherePoint sphere_point_from_json(const json& j)
{
    SpherePoint p = as_sphere_point(make_direction(int_from(j.at("x")), int_from(j.at("y")), int_from(j.at("z"))));
    if (j.contains("n") && int_from(j.at("n")) != p.n())
        throw DomainError("sphere point norm does not match its components");
    if (j.contains("color") && color_from(j.at("color")) != parity_color(p))
        throw DomainError("sphere point color does not match its z parity");
    return p;
}

json to_json(const RationalRotation& r)
{
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i)
        rows.push_back(json::array({to_string(r(i, 0)), to_string(r(i, 1)), to_string(r(i, 2))}));
    return rows;
}

RationalRotation rotation_from_json(const json& j)
{
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            m[i][k] = rat_from(j.at(i).at(k));
    return RationalRotation(std::move(m));
}

json to_json(const ApproxWitness& w)
{
    return json{{"result", to_json(w.result)},
                {"rotation", to_json(w.rotation)},
                {"kind", to_string(w.kind)},
                {"word", to_string(w.word)},
                {"word_length", word_length(w.word)},
                {"permuted", w.permuted},
                {"equator_parameter", w.equator_parameter ? json(to_string(*w.equator_parameter)) : json(nullptr)},
                {"certified_angle_bound", to_string(w.certified_angle_bound)}};
}

ApproxWitness witness_from_json(const json& j)
{
    std::optional<Rat> t;
    if (!j.at("equator_parameter").is_null())
        t = rat_from(j.at("equator_parameter"));
    return ApproxWitness{sphere_point_from_json(j.at("result")),
                         rotation_from_json(j.at("rotation")),
                         kind_from(j.at("kind").get<std::string>()),
                         parse_word(j.at("word").get<std::string>()),
                         j.at("permuted").get<bool>(),
                         std::move(t),
                         rat_from(j.at("certified_angle_bound"))};
}

json to_json(const TriadApproximation& t)
{
    json members = json::array();
    json witnesses = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        members.push_back(to_json(t.triad[i]));
        witnesses.push_back(to_json(t.witnesses[i]));
    }
    return json{{"members", members}, {"witnesses", witnesses}};
}

TriadApproximation triad_approximation_from_json(const json& j)
{
    const json& m = j.at("members");
    const json& w = j.at("witnesses");
    return TriadApproximation{
        RationalTriad(sphere_point_from_json(m.at(0)), sphere_point_from_json(m.at(1)), sphere_point_from_json(m.at(2))),
        {witness_from_json(w.at(0)), witness_from_json(w.at(1)), witness_from_json(w.at(2))}};
}

json to_json(const ApproxTarget& t)
{
    return json{{"center", json::array({to_string(t.center[0]), to_string(t.center[1]), to_string(t.center[2])})},
                {"radius", to_string(t.radius)},
                {"eps", to_string(t.eps)}};
}

json to_json(const SearchResult& r, const OrthoGraph& g)
{
    json coloring = nullptr;
    if (r.coloring) {
        coloring = json::object();
        for (std::size_t i = 0; i < g.size(); ++i)
            coloring[g.labels[i]] = to_string((*r.coloring)[i]);
    }
    return json{{"verdict", r.colorable ? "colorable" : "uncolorable"},
                {"mode", to_string(r.mode)},
                {"branch_order", to_string(r.order)},
                {"nodes", g.size()},
                {"edges", g.edges.size()},
                {"triads", g.triads.size()},
                {"stats",
                 {{"nodes_expanded", r.stats.nodes_expanded},
                  {"propagations", r.stats.propagations},
                  {"backtracks", r.stats.backtracks},
                  {"trace_digest", hex64(r.stats.trace_digest)},
                  {"elapsed_ms", r.stats.elapsed_ms}}},
                {"coloring", coloring}};
}

json to_json(const NullificationReport& r, const OrthoGraph& g)
{
    json triads = json::array();
    for (const auto& t : r.triads) {
        json entry{{"members", triple_labels(t.members, g)}};
        if (t.approximant) {
            entry["approximant"] = to_json(*t.approximant);
            entry["coloring"] = json::array({to_string(t.coloring[0]), to_string(t.coloring[1]), to_string(t.coloring[2])});
            entry["satisfies_constraint"] = t.satisfies_constraint;
        } else {
            entry["approximant"] = nullptr;
            entry["error"] = t.error;
        }
        triads.push_back(std::move(entry));
    }
    return json{{"eps", to_string(r.eps)},
                {"triad_count", r.triads.size()},
                {"unresolved", r.unresolved},
                {"violations", r.violations},
                {"complete", r.complete()},
                {"clean", r.clean()},
                {"triads", triads}};
}

json make_report(std::string_view command, const std::vector<std::string>& argv,
                 const std::vector<InputDigest>& inputs, json results, double elapsed_ms)
{
    json in = json::array();
    for (const auto& d : inputs)
        in.push_back({{"path", d.path}, {"sha256", d.sha256}});
    return json{{"schema", kReportSchema},
                {"version", kVersion},
                {"command", command},
                {"argv", argv},
                {"inputs", in},
                {"results", std::move(results)},
                {"elapsed_ms", elapsed_ms}};
}

} // namespace ksnull
