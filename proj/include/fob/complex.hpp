#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fob/rational.hpp"

namespace fob {

enum class BoundaryType { Interior, Binding, Leaf };

struct CornerMark {
  std::string name;
  int sign = 0;  // +1 or -1
};

struct ValidationIssue {
  std::string rule;
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string rule, std::string where, std::string message) {
    issues.push_back({std::move(rule), std::move(where), std::move(message)});
  }
  std::string summary() const;
};

// Provenance of a boundary slot: which original (root) slot it is a piece of,
// and the parameter range it occupies there. Slots created by surgeries get
// fresh roots named after the event that made them.
struct SlotProvenance {
  std::string root;
  Rational lo{0}, hi{1};
};

// Oriented polygonal complex. Faces are cyclic slot lists, counterclockwise.
// Interior edges are fixed-point-free pairings of slots; a pairing identifies
// the two slots head-to-tail, which keeps the glued surface oriented. The
// `aligned` flag records an (illegal) head-to-head identification so that the
// validator can report it.
class SurfaceComplex {
public:
  struct Slot {
    std::string name;
    int face = -1;
    int pos = -1;          // index in face cycle
    int partner = -1;      // interior pairing, -1 on boundary
    bool aligned = false;  // true = orientation-breaking gluing (validation error)
    BoundaryType type = BoundaryType::Interior;
    std::string leaf_class;               // for Leaf slots
    std::optional<CornerMark> mark_before;  // elliptic mark at this slot's tail corner
    SlotProvenance prov;
    bool alive = true;
  };
  struct Face {
    std::string name;
    std::vector<int> slots;  // cyclic, ccw
    bool alive = true;
  };

  // construction
  int add_face(const std::string& name, const std::vector<std::string>& slot_names);
  void glue(const std::string& a, const std::string& b, bool aligned = false);
  void set_boundary(const std::string& slot, BoundaryType t, const std::string& leaf_class = "");
  void set_mark_before(const std::string& slot, const CornerMark& m);

  // access
  int slot_index(const std::string& name) const;           // -1 if absent
  int face_index(const std::string& name) const;
  const Slot& slot(int i) const { return slots_[i]; }
  Slot& slot_mut(int i) { return slots_[i]; }
  const Face& face(int i) const { return faces_[i]; }
  int num_slots() const { return static_cast<int>(slots_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  std::vector<int> live_faces() const;
  std::vector<int> live_slots() const;

  int next_in_face(int s) const;  // successor slot in the same face cycle
  int prev_in_face(int s) const;
  // Next boundary slot after s along the boundary walk (surface on the left).
  int next_boundary_slot(int s) const;
  int prev_boundary_slot(int s) const;

  bool is_boundary(int s) const { return slots_[s].partner < 0; }

  // derived combinatorics
  int euler_characteristic() const;
  int num_vertices() const;
  int num_edges() const;
  std::vector<std::vector<int>> boundary_components() const;  // cycles of boundary slots
  std::vector<std::vector<int>> face_components() const;      // faces grouped by connectivity
  ValidationReport validate() const;

  // A maximal run of same-class Leaf slots (one geometric leaf arc), or a
  // maximal run of Binding slots (one binding arc / circle).
  struct BoundaryRun {
    BoundaryType type = BoundaryType::Leaf;
    std::string leaf_class;
    std::vector<int> slots;                  // in boundary order
    std::optional<CornerMark> start_mark;    // mark at the run's initial corner
    std::optional<CornerMark> end_mark;      // mark at the corner after the run
    bool closed = false;                     // run is a whole unmarked component
  };
  std::vector<BoundaryRun> boundary_runs(bool split_by_class = true) const;

  // Recompute leaf classes from the run structure. Runs consisting of exactly
  // the slots of one surviving class keep their name; changed runs are named
  // fresh_prefix + ".A", ".B", ... in boundary order. Returns the fresh names.
  std::vector<std::string> reclass_leaves(const std::string& fresh_prefix);

  // surgeries (mutating; the engine copies first when value semantics matter)

  // Split a boundary slot at interior positions (strictly increasing, in
  // (0,1)). Returns the new slot indices in order. Provenance ranges are
  // subdivided accordingly; the first piece keeps the old slot's mark.
  std::vector<int> split_boundary_slot(int s, const std::vector<Rational>& cuts);

  // Split an interior edge (slot pair) at one position along `s`. The partner
  // is split at the mirrored position. Returns the two pieces of s in order.
  std::vector<int> split_interior_edge(int s, const Rational& cut);

  // Split face f along a chord between two of its corners (corner i = tail of
  // f.slots[i]). Creates a new interior edge between two new faces. Returns
  // the pair of new edge slots (side of first face, side of second face).
  std::pair<int, int> split_face(int f, int corner_a, int corner_b,
                                 const std::string& edge_name);

  // Un-glue every edge in `path` (each given by one of its slots); both sides
  // become Leaf boundary. Leaf classes are then recomputed.
  void cut_edges(const std::vector<int>& path_slots, const std::string& event_name);

  // Attach a square face along two boundary sub-slots (which must already be
  // exactly the feet). New free sides are typed `side_type`.
  // Returns {foot1_glued, side1, foot2_glued, side2} slot indices of the new face.
  std::vector<int> attach_square(int foot1, int foot2, BoundaryType side_type,
                                 const std::string& event_name);

  // Find the current boundary slot covering (root, pos); returns slot and the
  // position rescaled into that slot. Throws if absent or pos at a breakpoint.
  std::pair<int, Rational> resolve_on_root(const std::string& root, const Rational& pos) const;

  // Canonical boundary description used for final-page vs reference-page
  // comparison and reporting: per component, the cyclic run word.
  struct RunWord {
    // one entry per run: "B:<root-set>" for binding (roots in walk order),
    // "L" for leaf runs, with marks interleaved as "+name"/"-name"
    std::vector<std::string> word;
  };
  std::vector<RunWord> canonical_boundary() const;

  SurfaceComplex clone() const { return *this; }

private:
  std::vector<Slot> slots_;
  std::vector<Face> faces_;

  int corner_id(int face, int idx) const;
  friend class VertexMap;
};

// Union-find over face corners; exposes vertex classes.
class VertexMap {
public:
  explicit VertexMap(const SurfaceComplex& c);
  int vertex_of_tail(int slot) const;  // vertex at the tail corner of slot
  int vertex_of_head(int slot) const;
  int count() const { return count_; }

private:
  const SurfaceComplex& c_;
  std::vector<int> parent_;
  std::vector<int> corner_of_slot_tail_;
  int count_ = 0;
  int find(int x) const;
};

}  // namespace fob
