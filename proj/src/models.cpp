#include "rsg/models.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rsg/union_find.hpp"

namespace rsg {

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::T: return "t";
    case ModelKind::Tprime: return "tprime";
    case ModelKind::S: return "s";
    case ModelKind::Sprime: return "sprime";
  }
  return "?";
}

std::optional<ModelKind> parse_model(std::string_view name) {
  if (name == "t") return ModelKind::T;
  if (name == "tprime") return ModelKind::Tprime;
  if (name == "s") return ModelKind::S;
  if (name == "sprime") return ModelKind::Sprime;
  return std::nullopt;
}

void ModelParams::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  switch (kind) {
    case ModelKind::T:
    case ModelKind::Tprime:
      if (t < 3) throw std::invalid_argument("polygons need at least 3 sides (t >= 3)");
      if ((t * n) % 2 != 0)
        throw std::invalid_argument("t*n must be even so all darts can be matched");
      if (kind == ModelKind::T && m > n)
        throw std::invalid_argument("T model allows at most one boundary side per polygon (m <= n)");
      if (kind == ModelKind::Tprime && m > t * n)
        throw std::invalid_argument("Tprime allows at most one insertion per corner (m <= t*n)");
      break;
    case ModelKind::S:
    case ModelKind::Sprime:
      if (n % 2 != 0)
        throw std::invalid_argument("S/Sprime need an even number of ordinary edges");
      if (kind == ModelKind::Sprime && m > n)
        throw std::invalid_argument("Sprime allows at most one insertion per corner (m <= n)");
      break;
  }
}

namespace {

constexpr label_t kFree = 0xFFFFFFFFu;

// Unified view of the glued complex: one slot per polygon side, boundary
// edges included (primed instances are expanded so that the insertion at
// corner k becomes a free slot immediately before dart k).
struct SlotComplex {
  std::vector<label_t> next;      // clockwise successor within the polygon
  std::vector<label_t> partner;   // kFree marks a boundary side
  std::vector<label_t> free_slots;
  std::vector<label_t> tag;       // external label reported for each free slot
};

SlotComplex make_complex(const GluingInstance& inst) {
  const auto N = static_cast<std::size_t>(inst.matched());
  const auto m = inst.primed() ? inst.insertions.size() : inst.free_darts.size();
  const std::size_t total = N + m;

  SlotComplex cx;
  cx.partner.assign(total, kFree);
  cx.tag.assign(total, 0);
  for (std::size_t k = 0; k < N; ++k) cx.partner[k] = inst.matching.partner(static_cast<label_t>(k));

  if (!inst.primed()) {
    cx.next.assign(inst.rotation.images().begin(), inst.rotation.images().end());
    cx.free_slots = inst.free_darts;
    for (label_t f : inst.free_darts) cx.tag[f] = f;
    return cx;
  }

  // Expand insertions. Free slot N+r (r = rank of the corner) is spliced in
  // front of dart k, so its head lands on corner k.
  cx.next.assign(total, 0);
  std::vector<bool> inserted(N, false);
  for (label_t c : inst.insertions) inserted[c] = true;
  const std::size_t t = inst.params.single_polygon()
                            ? N
                            : static_cast<std::size_t>(inst.params.t);
  std::size_t next_free = N;
  for (std::size_t lo = 0; lo < N; lo += t) {
    label_t first = kFree;
    label_t prev = kFree;
    auto link = [&](label_t slot) {
      if (first == kFree) first = slot;
      if (prev != kFree) cx.next[prev] = slot;
      prev = slot;
    };
    for (std::size_t k = lo; k < lo + t; ++k) {
      if (inserted[k]) {
        const auto f = static_cast<label_t>(next_free++);
        cx.tag[f] = static_cast<label_t>(k);
        cx.free_slots.push_back(f);
        link(f);
      }
      link(static_cast<label_t>(k));
    }
    cx.next[prev] = first;
  }
  return cx;
}

}  // namespace

GluingInstance assemble_instance(const ModelParams& params, std::vector<label_t> placement,
                                 Matching matching) {
  params.validate();
  const auto N = static_cast<std::size_t>(params.matched_darts());
  const auto m = static_cast<std::size_t>(params.m);
  if (matching.size() != N)
    throw std::invalid_argument("assemble_instance: matching does not cover the matched darts");

  GluingInstance inst;
  inst.params = params;
  inst.matching = std::move(matching);

  auto require_placement = [&](std::size_t domain) {
    if (placement.size() != m)
      throw std::invalid_argument("assemble_instance: placement size must equal m");
    if (!std::is_sorted(placement.begin(), placement.end()) ||
        std::adjacent_find(placement.begin(), placement.end()) != placement.end())
      throw std::invalid_argument("assemble_instance: placement must be a sorted set");
    if (!placement.empty() && placement.back() >= domain)
      throw std::invalid_argument("assemble_instance: placement label out of range");
  };

  switch (params.kind) {
    case ModelKind::Tprime:
    case ModelKind::Sprime: {
      require_placement(N);
      inst.insertions = std::move(placement);
      inst.rotation = params.single_polygon()
                          ? canonical_rotation_ngon(N)
                          : canonical_rotation_tgons(static_cast<std::size_t>(params.n),
                                                     static_cast<std::size_t>(params.t));
      break;
    }
    case ModelKind::T: {
      if (!placement.empty())
        throw std::invalid_argument("assemble_instance: T model places its boundary canonically");
      const auto t = static_cast<std::size_t>(params.t);
      std::vector<label_t> img(N + m);
      for (std::size_t i = 0; i < static_cast<std::size_t>(params.n); ++i) {
        const std::size_t lo = i * t;
        for (std::size_t j = 0; j + 1 < t; ++j) img[lo + j] = static_cast<label_t>(lo + j + 1);
        if (i < m) {
          img[lo + t - 1] = static_cast<label_t>(N + i);  // boundary side closes the square
          img[N + i] = static_cast<label_t>(lo);
        } else {
          img[lo + t - 1] = static_cast<label_t>(lo);
        }
      }
      inst.rotation = Permutation::from_images_unchecked(std::move(img));
      for (std::size_t i = 0; i < m; ++i) inst.free_darts.push_back(static_cast<label_t>(N + i));
      break;
    }
    case ModelKind::S: {
      const std::size_t positions = N + m;
      require_placement(positions);
      std::vector<bool> is_boundary(positions, false);
      for (label_t pos : placement) is_boundary[pos] = true;
      // Sides take labels in position order: darts 0..N-1, free N..N+m-1.
      std::vector<label_t> side_at(positions);
      label_t next_dart = 0;
      auto next_freel = static_cast<label_t>(N);
      for (std::size_t pos = 0; pos < positions; ++pos)
        side_at[pos] = is_boundary[pos] ? next_freel++ : next_dart++;
      std::vector<label_t> img(positions);
      for (std::size_t pos = 0; pos < positions; ++pos)
        img[side_at[pos]] = side_at[(pos + 1) % positions];
      inst.rotation = Permutation::from_images_unchecked(std::move(img));
      for (std::size_t i = 0; i < m; ++i) inst.free_darts.push_back(static_cast<label_t>(N + i));
      break;
    }
  }
  return inst;
}

GluingInstance build_instance(const ModelParams& params, RngStream& stream) {
  params.validate();
  const auto N = static_cast<std::size_t>(params.matched_darts());
  const auto m = static_cast<std::size_t>(params.m);

  std::vector<label_t> placement;
  switch (params.kind) {
    case ModelKind::T:
      break;  // canonical
    case ModelKind::S:
      placement = sample_subset(N + m, m, stream);
      break;
    case ModelKind::Tprime:
    case ModelKind::Sprime:
      placement = sample_subset(N, m, stream);
      break;
  }
  Matching beta = sample_matching(N, stream);
  return assemble_instance(params, std::move(placement), std::move(beta));
}

Permutation gamma_of(const GluingInstance& inst) {
  if (!inst.primed() && !inst.free_darts.empty())
    throw std::invalid_argument(
        "gamma_of: shortcut needs a canonical rotation over the matched darts "
        "(primed model or m = 0)");
  return compose(inst.rotation, inst.matching.as_permutation());
}

SplitCounts boundary_shortcut(const Permutation& gamma, std::span<const label_t> insertions) {
  const std::size_t n = gamma.size();
  std::vector<bool> hit(n, false);
  for (label_t c : insertions) {
    if (c >= n) throw std::invalid_argument("boundary_shortcut: insertion out of range");
    hit[c] = true;
  }
  std::vector<bool> seen(n, false);
  SplitCounts counts;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    bool boundary = false;
    for (label_t x = static_cast<label_t>(start); !seen[x]; x = gamma(x)) {
      seen[x] = true;
      boundary |= hit[x];
    }
    (boundary ? counts.boundary : counts.internal) += 1;
  }
  return counts;
}

BoundaryTrace boundary_walk(const GluingInstance& inst) {
  const SlotComplex cx = make_complex(inst);
  BoundaryTrace trace;
  trace.total_boundary_vertices = static_cast<std::int64_t>(cx.free_slots.size());

  std::vector<bool> visited(cx.next.size(), false);
  for (label_t f : cx.free_slots) {
    if (visited[f]) continue;
    std::vector<label_t> circuit;
    label_t cur = f;
    do {
      visited[cur] = true;
      circuit.push_back(cx.tag[cur]);
      // Cross the former vertex at the head of cur: each hop s -> next[partner[s]]
      // visits a fresh corner wedge, so the scan ends at a boundary side.
      label_t s = cx.next[cur];
      while (cx.partner[s] != kFree) s = cx.next[cx.partner[s]];
      cur = s;
    } while (cur != f);
    trace.cycles.push_back(std::move(circuit));
  }
  return trace;
}

VertexClasses vertex_classes(const GluingInstance& inst) {
  const SlotComplex cx = make_complex(inst);
  const auto total = static_cast<std::size_t>(cx.next.size());

  // Corner s is the tail of slot s; gluing identifies tail(s) with
  // head(partner(s)) = tail(next(partner(s))).
  UnionFind uf(total);
  for (std::size_t s = 0; s < total; ++s)
    if (cx.partner[s] != kFree) uf.unite(static_cast<label_t>(s), cx.next[cx.partner[s]]);

  std::vector<bool> boundary_root(total, false);
  std::int64_t boundary = 0;
  for (label_t f : cx.free_slots) {
    for (label_t corner : {f, cx.next[f]}) {  // tail and head of the boundary edge
      const label_t r = uf.find(corner);
      if (!boundary_root[r]) {
        boundary_root[r] = true;
        ++boundary;
      }
    }
  }
  VertexClasses vc;
  vc.boundary = boundary;
  vc.internal = static_cast<std::int64_t>(uf.set_count()) - boundary;
  return vc;
}

std::int64_t connected_components(const GluingInstance& inst) {
  if (inst.params.single_polygon()) return 1;
  const auto t = static_cast<std::uint32_t>(inst.params.t);
  const auto N = static_cast<label_t>(inst.matching.size());
  UnionFind uf(static_cast<std::size_t>(inst.params.n));
  for (label_t k = 0; k < N; ++k) uf.unite(k / t, inst.matching.partner(k) / t);
  return static_cast<std::int64_t>(uf.set_count());
}

SurfaceSummary summarize(const GluingInstance& inst) {
  const ModelParams& p = inst.params;
  const std::int64_t N = p.matched_darts();

  SurfaceSummary s;
  s.faces = p.polygon_count();
  s.edges = N / 2 + p.m;
  if (inst.primed() || p.m == 0) {
    const SplitCounts bi = boundary_shortcut(gamma_of(inst), inst.insertions);
    s.B = bi.boundary;
    s.I = bi.internal;
    s.vertices = s.I + p.m;  // every boundary edge contributes one boundary vertex
  } else {
    const BoundaryTrace trace = boundary_walk(inst);
    const VertexClasses vc = vertex_classes(inst);
    s.B = static_cast<std::int64_t>(trace.cycles.size());
    s.I = vc.internal;
    s.vertices = vc.internal + vc.boundary;
  }
  s.components = connected_components(inst);
  s.connected = s.components == 1;
  s.chi = s.faces - s.edges + s.vertices;

  const std::int64_t genus2 = 2 * s.components - s.B - s.chi;
  if (genus2 < 0 || genus2 % 2 != 0)
    throw std::logic_error("summarize: Euler data does not yield a nonnegative integer genus");
  s.genus = genus2 / 2;
  return s;
}

}  // namespace rsg
