#include <bit>
#include <chrono>
#include <stdexcept>

#include "ksnull/error.hpp"
#include "ksnull/ks.hpp"

namespace ksnull {

const char* to_string(ConstraintMode m) { return m == ConstraintMode::Triads ? "triads" : "triads+pairs"; }

ConstraintMode parse_mode(std::string_view s)
{
    if (s == "triads")
        return ConstraintMode::Triads;
    if (s == "triads+pairs")
        return ConstraintMode::TriadsAndPairs;
    throw DomainError("unknown constraint mode '" + std::string(s) + "'");
}

const char* to_string(BranchOrder o) { return o == BranchOrder::MostConstrained ? "most-constrained" : "static-no-first"; }

bool verify_coloring(const OrthoGraph& g, const Coloring& c, ConstraintMode mode)
{
    if (c.size() != g.size())
        return false;
    for (const auto& t : g.triads) {
        int yes = 0;
        for (std::size_t i : t)
            if (c[i] == Color::Yes)
                ++yes;
        if (yes != 1)
            return false;
    }
    if (mode == ConstraintMode::TriadsAndPairs)
        for (const auto& [i, j] : g.edges)
            if (c[i] == Color::Yes && c[j] == Color::Yes)
                return false;
    return true;
}

std::uint64_t count_colorings(const OrthoGraph& g, ConstraintMode mode, std::uint64_t cap)
{
    const std::size_t n = g.size();
    if (n > 24)
        throw TooLarge("count_colorings enumerates at most 24 nodes, got " + std::to_string(n));
    std::vector<std::uint32_t> triad_masks;
    for (const auto& t : g.triads)
        triad_masks.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
    std::vector<std::uint32_t> pair_masks;
    if (mode == ConstraintMode::TriadsAndPairs)
        for (const auto& [i, j] : g.edges)
            pair_masks.push_back((1u << i) | (1u << j));

    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total && count < cap; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        bool ok = true;
        for (auto tm : triad_masks)
            if (std::popcount(mask & tm) != 1) {
                ok = false;
                break;
            }
        if (ok)
            for (auto pm : pair_masks)
                if ((mask & pm) == pm) {
                    ok = false;
                    break;
                }
        if (ok)
            ++count;
    }
    return count;
}

namespace {

constexpr std::int8_t kUnset = -1;
constexpr std::int8_t kNo = 0;
constexpr std::int8_t kYes = 1;

class Solver {
public:
    Solver(const OrthoGraph& g, const SearchOptions& opts) : g_(g), opts_(opts), value_(g.size(), kUnset)
    {
        node_triads_.resize(g.size());
        for (std::size_t t = 0; t < g.triads.size(); ++t)
            for (std::size_t i : g.triads[t])
                node_triads_[i].push_back(t);
        neighbors_.resize(g.size());
        if (opts.mode == ConstraintMode::TriadsAndPairs)
            for (const auto& [i, j] : g.edges) {
                neighbors_[i].push_back(j);
                neighbors_[j].push_back(i);
            }
        stats_.trace_digest = 1469598103934665603ull;
    }

    bool run() { return solve(); }

    Coloring coloring() const
    {
        Coloring c(value_.size(), Color::No);
        for (std::size_t i = 0; i < value_.size(); ++i)
            if (value_[i] == kYes)
                c[i] = Color::Yes;
        return c;
    }

    const SearchStats& stats() const { return stats_; }

private:
    void mix(std::uint64_t x)
    {
        for (int b = 0; b < 8; ++b) {
            stats_.trace_digest ^= (x >> (8 * b)) & 0xff;
            stats_.trace_digest *= 1099511628211ull;
        }
    }

    // Assigns and queues; false on an immediate clash.
    bool assign(std::size_t node, std::int8_t v)
    {
        if (value_[node] != kUnset)
            return value_[node] == v;
        value_[node] = v;
        trail_.push_back(node);
        queue_.push_back(node);
        return true;
    }

    bool force(std::size_t node, std::int8_t v)
    {
        if (value_[node] == kUnset) {
            ++stats_.propagations;
            mix((static_cast<std::uint64_t>(node) << 2) | static_cast<std::uint64_t>(v) | 2);
        }
        return assign(node, v);
    }

    bool propagate()
    {
        while (!queue_.empty()) {
            std::size_t x = queue_.back();
            queue_.pop_back();
            if (value_[x] == kYes) {
                for (std::size_t t : node_triads_[x])
                    for (std::size_t y : g_.triads[t])
                        if (y != x && !force(y, kNo))
                            return false;
                for (std::size_t y : neighbors_[x])
                    if (!force(y, kNo))
                        return false;
            } else {
                for (std::size_t t : node_triads_[x]) {
                    std::size_t unset = 0, unset_node = 0;
                    bool has_yes = false;
                    for (std::size_t y : g_.triads[t]) {
                        if (value_[y] == kYes)
                            has_yes = true;
                        else if (value_[y] == kUnset) {
                            ++unset;
                            unset_node = y;
                        }
                    }
                    if (has_yes)
                        continue;
                    if (unset == 0)
                        return false;
                    if (unset == 1 && !force(unset_node, kYes))
                        return false;
                }
            }
        }
        return true;
    }

    bool triad_open(std::size_t t) const
    {
        for (std::size_t y : g_.triads[t])
            if (value_[y] == kYes)
                return false;
        return true;
    }

    // Next branching node, or nullopt when every triad already has its Yes.
    std::optional<std::size_t> pick() const
    {
        std::optional<std::size_t> best;
        std::uint64_t best_score = 0;
        for (std::size_t i = 0; i < value_.size(); ++i) {
            if (value_[i] != kUnset)
                continue;
            std::uint64_t open = 0, tight = 0;
            for (std::size_t t : node_triads_[i])
                if (triad_open(t)) {
                    ++open;
                    for (std::size_t y : g_.triads[t])
                        if (value_[y] == kNo)
                            ++tight;
                }
            if (open == 0)
                continue;
            if (opts_.order == BranchOrder::StaticNoFirst)
                return i;
            std::uint64_t score = tight * 1'000'000 + open * 1'000 + neighbors_[i].size();
            if (!best || score > best_score) {
                best = i;
                best_score = score;
            }
        }
        return best;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            value_[trail_.back()] = kUnset;
            trail_.pop_back();
        }
        queue_.clear();
    }

    bool solve()
    {
        auto node = pick();
        if (!node)
            return true; // remaining nodes default to No
        const std::int8_t first = opts_.order == BranchOrder::MostConstrained ? kYes : kNo;
        for (std::int8_t v : {first, static_cast<std::int8_t>(1 - first)}) {
            if (++stats_.nodes_expanded > opts_.budget)
                throw BudgetExceeded("coloring search exceeded " + std::to_string(opts_.budget) + " decisions");
            mix((static_cast<std::uint64_t>(*node) << 2) | static_cast<std::uint64_t>(v));
            std::size_t mark = trail_.size();
            if (assign(*node, v) && propagate() && solve())
                return true;
            undo(mark);
            ++stats_.backtracks;
        }
        return false;
    }

    const OrthoGraph& g_;
    const SearchOptions& opts_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<std::size_t>> node_triads_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::size_t> trail_;
    std::vector<std::size_t> queue_;
    SearchStats stats_;
};

} // namespace

SearchResult search_coloring(const OrthoGraph& g, const SearchOptions& opts)
{
    auto start = std::chrono::steady_clock::now();
    Solver solver(g, opts);
    bool ok = solver.run();
    SearchResult r;
    r.colorable = ok;
    r.stats = solver.stats();
    r.mode = opts.mode;
    r.order = opts.order;
    if (ok) {
        Coloring c = solver.coloring();
        if (!verify_coloring(g, c, opts.mode))
            throw std::logic_error("search produced a coloring that fails verification");
        r.coloring = std::move(c);
    }
    r.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace ksnull
