#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rsg/perm.hpp"
#include "rsg/rng.hpp"

namespace rsg {

// The four gluing models:
//   T       n polygons of t sides, the first m carry one extra boundary side
//   Tprime  n polygons of t sides, boundary edges inserted at m corners
//   S       one polygon of n ordinary plus m boundary sides, placement random
//   Sprime  one polygon of n sides, boundary edges inserted at m corners
enum class ModelKind { T, Tprime, S, Sprime };

const char* to_string(ModelKind kind);
std::optional<ModelKind> parse_model(std::string_view name);

struct ModelParams {
  ModelKind kind = ModelKind::Sprime;
  std::int64_t n = 2;  // polygon count for T/Tprime, ordinary-edge count for S/Sprime
  std::int64_t m = 0;  // boundary edges
  std::int64_t t = 3;  // polygon sides for T/Tprime; ignored for S/Sprime

  bool primed() const { return kind == ModelKind::Tprime || kind == ModelKind::Sprime; }
  bool single_polygon() const { return kind == ModelKind::S || kind == ModelKind::Sprime; }
  std::int64_t matched_darts() const { return single_polygon() ? n : t * n; }  // N
  std::int64_t polygon_count() const { return single_polygon() ? 1 : n; }      // faces

  // Throws std::invalid_argument on violated constraints.
  void validate() const;
};

// One sampled surface. Matched darts carry labels 0..N-1; for T/S the m free
// (boundary) sides carry labels N..N+m-1 and the rotation runs over all N+m
// sides. For primed models the rotation is the canonical one on 0..N-1 and
// the boundary lives in `insertions` (corner labels).
//
// Corner k is the polygon vertex at the tail of dart k in clockwise order;
// an insertion at corner k sticks a boundary edge between darts
// rotation^-1(k) and k. Gluing identifies tail(k) with head(partner(k)),
// which is what makes the vertex classes of the closed complex exactly the
// cycles of gamma = rotation o matching.
struct GluingInstance {
  ModelParams params;
  Permutation rotation;
  Matching matching;
  std::vector<label_t> free_darts;  // sorted; empty for primed models
  std::vector<label_t> insertions;  // sorted corner labels; empty for unprimed

  std::int64_t matched() const { return static_cast<std::int64_t>(matching.size()); }
  bool primed() const { return params.primed(); }
};

// Deterministic assembly from a boundary placement and a matching. For S the
// placement is the set of boundary positions among the n+m cyclic slots; for
// primed models it is the set of insertion corners; for T it must be empty
// (the squares are the first m polygons, boundary side last — canonical).
// Both the sampler and the exact enumeration go through this function.
GluingInstance assemble_instance(const ModelParams& params, std::vector<label_t> placement,
                                 Matching matching);

// Draws the boundary placement first, then the matching, each uniform over
// its family and independent of the other.
GluingInstance build_instance(const ModelParams& params, RngStream& stream);

// rotation o matching on the N matched darts. Only defined when the boundary
// does not interleave the matched sides: primed models, or m = 0.
Permutation gamma_of(const GluingInstance& inst);

// B = cycles of gamma meeting the insertion set, I = the rest. A cycle with
// several insertions still yields exactly one boundary component.
SplitCounts boundary_shortcut(const Permutation& gamma, std::span<const label_t> insertions);

struct BoundaryTrace {
  // Boundary circuits; entries are free-side labels (T/S) or insertion
  // corners (primed models). Circuits partition the boundary edges.
  std::vector<std::vector<label_t>> cycles;
  std::int64_t total_boundary_vertices = 0;  // always m: edges and vertices alternate
};

// Walks the boundary: from each unvisited boundary edge, step to the next
// corner clockwise and hop across glued darts until the next boundary edge.
BoundaryTrace boundary_walk(const GluingInstance& inst);

struct VertexClasses {
  std::int64_t internal = 0;
  std::int64_t boundary = 0;
};

// Union-find over polygon corners, merged across glued pairs; classes touching
// a boundary edge are boundary classes. Independent of boundary_walk and of
// the gamma shortcut, which is the point: the three routes cross-check.
VertexClasses vertex_classes(const GluingInstance& inst);

// Connected components of the polygon graph whose edges are the matched
// pairs. S/Sprime are single-polygon, hence always 1.
std::int64_t connected_components(const GluingInstance& inst);

struct SurfaceSummary {
  std::int64_t B = 0;        // boundary components
  std::int64_t I = 0;        // internal vertices
  std::int64_t genus = 0;    // summed over components
  std::int64_t chi = 0;      // faces - edges + vertices, boundary uncapped
  std::int64_t components = 1;
  bool connected = true;
  std::int64_t faces = 0;
  std::int64_t edges = 0;
  std::int64_t vertices = 0;
};

// chi = faces - edges + vertices and chi = 2*components - 2*genus - B hold
// exactly; genus falls out as an integer or summarize throws std::logic_error.
SurfaceSummary summarize(const GluingInstance& inst);

}  // namespace rsg
