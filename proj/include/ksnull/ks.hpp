#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksnull/density.hpp"
#include "ksnull/exact.hpp"
#include "ksnull/sphere.hpp"

namespace ksnull {

using Triple = std::array<std::size_t, 3>;

/// Finite set of rays over Q(sqrt d). Vectors are labeled by their 1-based
/// position in the file ("v1", "v2", ...).
struct VectorSet {
    long field = 1;
    std::vector<QuadVec> vectors;
    /// Declared triads as 0-based indices.
    std::vector<Triple> triads;
    /// For each declared triad, how many vectors preceded its `T` line; keeps
    /// serialization byte-identical for interleaved files.
    std::vector<std::size_t> triad_positions;

    std::string label(std::size_t i) const { return "v" + std::to_string(i + 1); }
};

/// Line-oriented format:
///   # comment            (blank lines are ignored as well)
///   field <d>
///   v <a:b> <a:b> <a:b>  (component a + b*sqrt(d), integers)
///   T <i> <j> <k>        (1-based indices of earlier v lines)
/// Throws ParseError (with line number), FieldMismatch,
/// NonOrthogonalDeclaredTriad, DegenerateInput (zero or duplicate ray).
VectorSet parse_vector_set(std::string_view text);

/// Canonical text: header, then v and T lines in their original order.
std::string serialize_vector_set(const VectorSet& vs);

/// Adds a vector, rejecting zero vectors and rays already present.
/// Throws DegenerateInput, FieldMismatch.
void add_vector(VectorSet& vs, const QuadVec& v);

bool projectively_equal(const QuadVec& a, const QuadVec& b);

struct OrthoGraph {
    std::vector<std::string> labels;
    /// Sorted (i < j) pairs of exactly orthogonal vectors.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// Sorted (i < j < k) mutually orthogonal triples.
    std::vector<Triple> triads;

    std::size_t size() const noexcept { return labels.size(); }
};

OrthoGraph build_graph(const VectorSet& vs);

enum class ConstraintMode {
    Triads,         ///< every triad has exactly one Yes
    TriadsAndPairs, ///< additionally no orthogonal pair has two Yes
};

const char* to_string(ConstraintMode m);
/// "triads" or "triads+pairs". Throws DomainError.
ConstraintMode parse_mode(std::string_view s);

using Coloring = std::vector<Color>;

/// Straight scan over every constraint; shares no code with the search.
bool verify_coloring(const OrthoGraph& g, const Coloring& c, ConstraintMode mode);

enum class BranchOrder {
    /// Most constrained node first, Yes before No, ties by lowest index.
    MostConstrained,
    /// Static lowest index first, No before Yes.
    StaticNoFirst,
};

const char* to_string(BranchOrder o);

struct SearchOptions {
    ConstraintMode mode = ConstraintMode::TriadsAndPairs;
    BranchOrder order = BranchOrder::MostConstrained;
    /// Maximum number of branching decisions.
    std::uint64_t budget = 50'000'000;
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t propagations = 0;
    std::uint64_t backtracks = 0;
    /// FNV-1a over the decision and propagation trace.
    std::uint64_t trace_digest = 0;
    double elapsed_ms = 0;
};

struct SearchResult {
    bool colorable = false;
    /// Present iff colorable; passes verify_coloring.
    std::optional<Coloring> coloring;
    SearchStats stats;
    ConstraintMode mode = ConstraintMode::TriadsAndPairs;
    BranchOrder order = BranchOrder::MostConstrained;
};

/// Backtracking with unit propagation. Throws BudgetExceeded.
SearchResult search_coloring(const OrthoGraph& g, const SearchOptions& opts = {});

/// Number of valid colorings by full enumeration, saturating at cap.
/// Throws TooLarge above 24 nodes.
std::uint64_t count_colorings(const OrthoGraph& g, ConstraintMode mode, std::uint64_t cap = UINT64_MAX);

/// Normalized rational enclosure of the ray v: |true_i - center_i| <= radius
/// for the unit vector v/|v|. Computed with exact interval arithmetic;
/// `bits` sets the width of the sqrt brackets.
struct Enclosure {
    std::array<Rat, 3> center;
    Rat radius;
};

Enclosure enclose_unit(const QuadVec& v, unsigned bits = 64);

/// The rational sphere point on the ray, when v is rational with a square norm.
std::optional<SpherePoint> rational_sphere_point(const QuadVec& v);

struct TriadReport {
    Triple members;
    /// Absent when the search budget ran out for this triad.
    std::optional<TriadApproximation> approximant;
    std::array<Color, 3> coloring{};
    bool satisfies_constraint = false;
    std::string error;
};

struct NullificationReport {
    Rat eps;
    std::vector<TriadReport> triads;
    std::size_t unresolved = 0;
    std::size_t violations = 0;

    bool complete() const noexcept { return unresolved == 0; }
    /// Every triad approximated and every approximant colored one Yes, two No.
    bool clean() const noexcept { return complete() && violations == 0; }
};

/// Replaces every triad of the set (declared and found) by a nearby exactly
/// orthogonal rational triad and colors it by z-parity. Throws DomainError
/// when the set has no triads or eps <= 0.
NullificationReport nullify(const VectorSet& vs, const Rat& eps, const ApproxOptions& opts = {});

/// Per-vector snapping to rational sphere points within eps. Orthogonality
/// between snapped vectors is generally lost; nullify is the per-triad
/// version. Throws IterationBudgetExceeded.
VectorSet snap_vectors(const VectorSet& vs, const Rat& eps, const ApproxOptions& opts = {});

} // namespace ksnull
