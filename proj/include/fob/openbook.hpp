#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fob/arcs.hpp"
#include "fob/complex.hpp"
#include "fob/foliation.hpp"

namespace fob {

// Address of a point / interval on the boundary, in root-slot coordinates.
struct BoundaryPoint {
  std::string root;
  Rational pos;
  std::string anchor;  // optional elliptic id the descending flowline spirals to
};
struct BoundaryInterval {
  std::string root;
  Rational lo, hi;
};

// A declared arc: endpoints in root coordinates plus the face/edge crossing
// sequence (by name). Positions along crossings are assigned by the engine.
struct ArcSpec {
  std::string name;
  bool closed = false;
  BoundaryPoint from, to;          // open arcs
  std::vector<std::string> faces;  // visited faces, in order
  std::vector<std::string> exits;  // edge slot crossed after each face (size = faces-1, or
                                   // = faces for closed curves, wrapping)
};

struct Event {
  std::string name;
  int sign = 0;
  Rational phase;
  std::vector<ArcSpec> trace;            // positive: stable-submanifold pieces on S0
  std::vector<BoundaryInterval> feet;    // negative: two feet on the pre-event page
};

struct TwistSpec {
  ArcSpec curve;  // closed curve on S0
  int sign = 0;
};

struct FoliatedOpenBook {
  std::string name;
  SurfaceComplex page0;
  std::vector<Event> events;
  std::vector<TwistSpec> twists;  // applied first-listed-first, after the flow
  std::map<std::string, ArcSpec> named_arcs;  // stabilizing / protected arcs; may carry a phase
  std::map<std::string, Rational> named_arc_phase;
};

struct Page {
  Rational lo, hi;  // phase interval
  SurfaceComplex complex;
  System system;    // tracked submanifold arcs, reduced
};

struct SortednessWitness {
  std::string ascending;  // arc name (gamma^- piece)
  std::string descending; // trace name
  Rational phase;
};

struct BuildResult {
  std::vector<Page> pages;
  SurfaceComplex working_page0;       // page0 refined so every trace is realizable
  System traces_on_page0;             // the installed trace pieces, reduced
  bool sorted = true;
  std::optional<SortednessWitness> witness;
  FoliatedBoundary boundary;
};

BuildResult build_pages(const FoliatedOpenBook& fob);

struct TripleComponent {
  std::string name;                 // P1, P2, ... deterministic
  std::vector<int> faces;           // faces of the cut complex
  int chi = 0;
  bool disc = false;
  int binding_runs = 0;
  int attach_intervals = 0;
  std::vector<std::string> corner_letters;  // elliptic marks on this component, walk order
  std::vector<int> binding_slots;   // endpoint slots for arc enumeration
};

struct Triple {
  SurfaceComplex page;      // S0 refined along every trace (= S)
  SurfaceComplex cut;       // same complex with trace edges cut open (P lives here)
  std::vector<TripleComponent> components;
  std::vector<TwistSpec> twists;          // realized twist word on `page`
  std::vector<NormalArc> twist_curves;    // resolved curves on `page`
};

Triple extract_triple(const FoliatedOpenBook& fob);
Triple extract_triple(const FoliatedOpenBook& fob, const BuildResult& build);

// first-return image of an arc of P (given in `page` coordinates)
NormalArc monodromy_image(const Triple& t, const NormalArc& a);

struct PartialVerdict {
  bool ok = false;
  std::string reason;     // offending component when !ok
};
PartialVerdict is_partial_open_book(const Triple& t);

FoliatedOpenBook stabilize(const FoliatedOpenBook& fob, const Rational& phase,
                           const ArcSpec& arc);

struct SortConnectResult {
  FoliatedOpenBook book;
  std::vector<std::pair<Rational, std::string>> stabilizations;  // (phase, arc description)
  std::optional<std::string> protected_note;
};
SortConnectResult sort_and_connect(const FoliatedOpenBook& fob,
                                   const std::optional<std::string>& protected_arc);

FoliatedBoundary boundary_of_open_book(const FoliatedOpenBook& fob);

ValidationReport validate_book(const FoliatedOpenBook& fob);

// Resolve a declared arc spec into a NormalArc on the given complex.
NormalArc resolve_arc(const SurfaceComplex& c, const ArcSpec& spec);

}  // namespace fob
