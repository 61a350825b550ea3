#pragma once

#include <map>
#include <string>
#include <vector>

#include "fob/complex.hpp"

namespace fob {

// One square tile of the open book foliation on the boundary: a hyperbolic
// point with its four elliptic corners and four leaf edges. Corners and edges
// are listed cyclically and interleaved: edge k joins corner k to corner k+1.
struct Tile {
  std::string name;   // event name of the hyperbolic point
  int sign = 0;       // +1 / -1
  int order = 0;      // position in the critical-value order, 1-based
  std::vector<std::string> corners;  // 4 elliptic ids, cyclic
  std::vector<int> corner_signs;     // +-1 per corner
  std::vector<std::string> edges;    // 4 leaf classes, edge k = (corner k, corner k+1)
};

struct FoliatedBoundary {
  std::map<std::string, int> elliptic;  // id -> sign
  std::vector<Tile> tiles;              // ordered by `order`
  // ribbon data: cyclic order of (tile index, corner index) around each
  // elliptic point; derived by the page engine, validated here
  std::map<std::string, std::vector<std::pair<int, int>>> ribbon;
};

ValidationReport validate_foliation(const FoliatedBoundary& f);

struct DividingSet {
  int components = 0;
  std::vector<std::string> words;  // cyclic descriptions, deterministic naming
};

// Boundary components of a regular neighborhood of the positive separatrix
// graph (positive elliptic points joined to the positive corners of positive
// tiles), using the ribbon structure.
DividingSet dividing_set(const FoliatedBoundary& f);

// Canonical content comparison up to relabeling of classes and elliptic ids.
bool same_foliation_up_to_relabeling(const FoliatedBoundary& a, const FoliatedBoundary& b);

std::string describe_foliation(const FoliatedBoundary& f);

}  // namespace fob
