#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fob/complex.hpp"

namespace fob {

// A point on the boundary of a face: either an arc endpoint on a boundary
// slot or a transverse crossing of an interior slot. Crossing portals are
// stored on the slot belonging to the visit's own face; the matching portal
// on the neighbouring visit sits on the partner slot at mirrored position.
struct Portal {
  bool is_end = false;
  int slot = -1;
  Rational pos{1, 2};

  bool same_point(const Portal& o) const {
    return is_end == o.is_end && slot == o.slot && pos == o.pos;
  }
};

struct Visit {
  int face = -1;
  Portal in, out;
};

// Reduced corner-crossing path. Open arcs have end portals on both outer
// sides; closed curves wrap from the last visit back to the first.
struct NormalArc {
  std::string name;
  bool closed = false;
  std::vector<Visit> visits;

  NormalArc reversed() const;
};

struct SystemArc {
  NormalArc arc;
  std::string role;  // engine tag: trace piece, ascender, protected, ...
};

// Arcs tracked together in one complex; minimal position is maintained by
// reduce(). Crossings are never stored, always derived from portal order.
struct System {
  std::vector<SystemArc> arcs;

  int find(const std::string& name) const;
};

struct CrossingRef {
  int arc_a, visit_a;
  int arc_b, visit_b;
  int face;
};

// validation / basic queries
void validate_arc(const SurfaceComplex& c, const NormalArc& a);
std::vector<CrossingRef> system_crossings(const SurfaceComplex& c, const System& sys);
int crossing_count(const SurfaceComplex& c, const System& sys, int ia, int ib);

// Minimal position: removes edge returns, bigons and half-bigons between every
// pair (including an arc against itself). Preserves classes rel endpoints.
void reduce(const SurfaceComplex& c, System& sys);

// dual-graph homotopy word; letters are (undirected edge id, +-1)
std::vector<std::pair<int, int>> arc_word(const SurfaceComplex& c, const NormalArc& a);
bool same_class_rel_endpoints(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b);
bool same_closed_class(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b);

// public ops named by the role they play
int geometric_intersection(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b);
bool isotopic(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b);

enum class Side { Left, Right, Equal };
// Germ comparison at a shared endpoint of the reduced pair.
Side is_left_of_at(const SurfaceComplex& c, const NormalArc& delta, const NormalArc& gamma,
                   int endpoint_slot, const Rational& endpoint_pos);

enum class ArcOrder { LessOrEqual, Greater, Incomparable };
ArcOrder compare_arcs(const SurfaceComplex& c, const NormalArc& delta, const NormalArc& gamma);

NormalArc dehn_twist(const SurfaceComplex& c, const NormalArc& a, const NormalArc& curve, int sign);

struct EnumeratedArc {
  NormalArc arc;
  int crossings = 0;
};
// All classes of properly embedded arcs inside `region_faces` with endpoints
// on `endpoint_slots`, at most `bound` crossings, one representative each,
// deterministic order.
std::vector<EnumeratedArc> enumerate_arcs(const SurfaceComplex& c,
                                          const std::vector<int>& region_faces,
                                          const std::vector<int>& endpoint_slots, int bound);

// portal rewriting used by the page engine during surgeries
struct SlotSplitMap {
  int old_slot;
  std::vector<int> pieces;          // new slots in order
  std::vector<Rational> bounds;     // size pieces+1, in old-slot coordinates
};
void rewrite_after_slot_split(System& sys, const SlotSplitMap& m);

// human-readable dump for reports/tests
std::string describe_arc(const SurfaceComplex& c, const NormalArc& a);

}  // namespace fob
