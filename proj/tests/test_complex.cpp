#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fob/complex.hpp"

using namespace fob;

namespace {

SurfaceComplex binding_square() {
  SurfaceComplex c;
  c.add_face("F", {"s", "e", "n", "w"});
  for (const char* sl : {"s", "e", "n", "w"}) c.set_boundary(sl, BoundaryType::Binding);
  return c;
}

// annulus from two squares, one boundary circle [b1 L1], the other [L2 b2]
SurfaceComplex annulus() {
  SurfaceComplex c;
  c.add_face("F1", {"a1", "r1", "t1", "l1"});
  c.add_face("F2", {"a2", "r2", "t2", "l2"});
  c.glue("r1", "l2");
  c.glue("r2", "l1");
  c.set_boundary("a1", BoundaryType::Binding);
  c.set_boundary("a2", BoundaryType::Leaf, "L1");
  c.set_boundary("t1", BoundaryType::Leaf, "L2");
  c.set_boundary("t2", BoundaryType::Binding);
  c.set_mark_before("a2", {"p1", +1});
  c.set_mark_before("a1", {"m1", -1});
  c.set_mark_before("t1", {"p2", +1});
  c.set_mark_before("t2", {"m2", -1});
  return c;
}

}  // namespace

TEST_CASE("single square with all-binding boundary is a legal disc") {
  SurfaceComplex c = binding_square();
  auto rep = c.validate();
  CHECK_MESSAGE(rep.ok(), rep.summary());
  CHECK(c.euler_characteristic() == 1);
  CHECK(c.boundary_components().size() == 1);
}

TEST_CASE("orientation-preserving self-gluing is rejected") {
  SurfaceComplex c;
  c.add_face("F", {"s", "e", "n", "w"});
  c.glue("s", "n", /*aligned=*/true);
  c.set_boundary("e", BoundaryType::Binding);
  c.set_boundary("w", BoundaryType::Binding);
  auto rep = c.validate();
  bool orient = false;
  for (auto& i : rep.issues) orient = orient || i.rule == "orientation";
  CHECK(orient);
}

TEST_CASE("closed leaf circles are rejected") {
  SurfaceComplex c;
  c.add_face("F", {"s", "e", "n", "w"});
  c.glue("e", "w");  // annulus from one square
  c.set_boundary("s", BoundaryType::Binding);
  c.set_boundary("n", BoundaryType::Leaf, "L");
  auto rep = c.validate();
  bool closed_leaf = false;
  for (auto& i : rep.issues) closed_leaf = closed_leaf || i.rule == "closed-leaf";
  CHECK(closed_leaf);
}

TEST_CASE("annulus combinatorics") {
  SurfaceComplex c = annulus();
  auto rep = c.validate();
  CHECK_MESSAGE(rep.ok(), rep.summary());
  CHECK(c.euler_characteristic() == 0);
  CHECK(c.boundary_components().size() == 2);
  auto runs = c.boundary_runs();
  CHECK(runs.size() == 4);  // two binding arcs, two leaf arcs
}

TEST_CASE("mark sign discipline") {
  SurfaceComplex c = annulus();
  c.set_mark_before("a2", {"p1", -1});  // leaf run starting at a sink
  CHECK_FALSE(c.validate().ok());
}

TEST_CASE("split_face keeps chi, cut_edges raises it") {
  SurfaceComplex c = binding_square();
  int f = c.face_index("F");
  // chord between corner 0 (tail of s) and corner 2 (tail of n)
  auto [e1, e2] = c.split_face(f, 0, 2, "d");
  CHECK(c.euler_characteristic() == 1);
  CHECK(c.live_faces().size() == 2);
  c.cut_edges({e1}, "ev");
  CHECK(c.euler_characteristic() == 2);
  CHECK(c.face_components().size() == 2);
  (void)e2;
}

TEST_CASE("cut along essential edge of annulus gives a disc") {
  SurfaceComplex c = annulus();
  int r1 = c.slot_index("r1");
  c.cut_edges({r1}, "ev");
  CHECK(c.euler_characteristic() == 1);
  CHECK(c.face_components().size() == 1);
  CHECK(c.boundary_components().size() == 1);
}

TEST_CASE("attach_square joins two discs") {
  SurfaceComplex c;
  c.add_face("F1", {"s1", "e1", "n1", "w1"});
  c.add_face("F2", {"s2", "e2", "n2", "w2"});
  for (const char* sl : {"s1", "e1", "w1", "s2", "e2", "w2"})
    c.set_boundary(sl, BoundaryType::Binding);
  c.set_boundary("n1", BoundaryType::Leaf, "L1");
  c.set_boundary("n2", BoundaryType::Leaf, "L2");
  c.set_mark_before("n1", {"p1", +1});
  c.set_mark_before("w1", {"m1", -1});
  c.set_mark_before("n2", {"p2", +1});
  c.set_mark_before("w2", {"m2", -1});
  REQUIRE(c.validate().ok());
  CHECK(c.euler_characteristic() == 2);

  int n1 = c.slot_index("n1");
  auto pieces1 = c.split_boundary_slot(n1, {Rational(2, 5), Rational(3, 5)});
  REQUIRE(pieces1.size() == 3);
  int n2 = c.slot_index("n2");
  auto pieces2 = c.split_boundary_slot(n2, {Rational(2, 5), Rational(3, 5)});
  c.attach_square(pieces1[1], pieces2[1], BoundaryType::Leaf, "h1");
  CHECK(c.euler_characteristic() == 1);
  CHECK(c.face_components().size() == 1);
  auto rep = c.validate();
  CHECK_MESSAGE(rep.ok(), rep.summary());
  auto runs = c.boundary_runs();
  int leaf_runs = 0;
  for (auto& r : runs)
    if (r.type == BoundaryType::Leaf) ++leaf_runs;
  CHECK(leaf_runs == 2);  // classes merged across the handle
}

TEST_CASE("attach both feet on one disc gives an annulus") {
  SurfaceComplex c;
  c.add_face("F", {"s", "e", "n", "w"});
  c.set_boundary("s", BoundaryType::Binding);
  c.set_boundary("e", BoundaryType::Leaf, "L1");
  c.set_boundary("n", BoundaryType::Binding);
  c.set_boundary("w", BoundaryType::Leaf, "L2");
  c.set_mark_before("e", {"p1", +1});
  c.set_mark_before("n", {"m1", -1});
  c.set_mark_before("w", {"p2", +1});
  c.set_mark_before("s", {"m2", -1});
  REQUIRE(c.validate().ok());
  auto pe = c.split_boundary_slot(c.slot_index("e"), {Rational(2, 5), Rational(3, 5)});
  auto pw = c.split_boundary_slot(c.slot_index("w"), {Rational(2, 5), Rational(3, 5)});
  c.attach_square(pe[1], pw[1], BoundaryType::Leaf, "h1");
  CHECK(c.euler_characteristic() == 0);
  CHECK(c.boundary_components().size() == 2);
  auto rep = c.validate();
  CHECK_MESSAGE(rep.ok(), rep.summary());
}

TEST_CASE("resolve_on_root sees through subdivisions") {
  SurfaceComplex c = binding_square();
  int s = c.slot_index("s");
  c.split_boundary_slot(s, {Rational(1, 2)});
  auto [slot, pos] = c.resolve_on_root("s", Rational(3, 4));
  CHECK(c.slot(slot).name == "s#2");
  CHECK(pos == Rational(1, 2));
}

TEST_CASE("split interior edge preserves structure") {
  SurfaceComplex c = annulus();
  int r1 = c.slot_index("r1");
  auto pieces = c.split_interior_edge(r1, Rational(1, 3));
  CHECK(pieces.size() == 2);
  CHECK(c.euler_characteristic() == 0);
  CHECK(c.validate().ok());
}
