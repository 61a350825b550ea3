#include "fob/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fob {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) os << "[" << i.rule << "] " << i.where << ": " << i.message << "\n";
  return os.str();
}

int SurfaceComplex::add_face(const std::string& name, const std::vector<std::string>& slot_names) {
  if (face_index(name) >= 0) throw std::runtime_error("duplicate face name " + name);
  if (slot_names.size() < 2) throw std::runtime_error("face " + name + " needs >= 2 slots");
  Face f;
  f.name = name;
  int fi = static_cast<int>(faces_.size());
  for (const auto& sn : slot_names) {
    if (slot_index(sn) >= 0) throw std::runtime_error("duplicate slot name " + sn);
    Slot s;
    s.name = sn;
    s.face = fi;
    s.pos = static_cast<int>(f.slots.size());
    s.prov.root = sn;
    f.slots.push_back(static_cast<int>(slots_.size()));
    slots_.push_back(std::move(s));
  }
  faces_.push_back(std::move(f));
  return fi;
}

void SurfaceComplex::glue(const std::string& a, const std::string& b, bool aligned) {
  int ia = slot_index(a), ib = slot_index(b);
  if (ia < 0 || ib < 0) throw std::runtime_error("glue: unknown slot " + (ia < 0 ? a : b));
  if (slots_[ia].partner >= 0 || slots_[ib].partner >= 0)
    throw std::runtime_error("glue: slot already glued");
  slots_[ia].partner = ib;
  slots_[ib].partner = ia;
  slots_[ia].aligned = slots_[ib].aligned = aligned;
  slots_[ia].type = slots_[ib].type = BoundaryType::Interior;
}

void SurfaceComplex::set_boundary(const std::string& slot, BoundaryType t, const std::string& leaf_class) {
  int i = slot_index(slot);
  if (i < 0) throw std::runtime_error("set_boundary: unknown slot " + slot);
  slots_[i].type = t;
  slots_[i].leaf_class = leaf_class;
}

void SurfaceComplex::set_mark_before(const std::string& slot, const CornerMark& m) {
  int i = slot_index(slot);
  if (i < 0) throw std::runtime_error("set_mark_before: unknown slot " + slot);
  slots_[i].mark_before = m;
}

int SurfaceComplex::slot_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(slots_.size()); ++i)
    if (slots_[i].alive && slots_[i].name == name) return i;
  return -1;
}

int SurfaceComplex::face_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
    if (faces_[i].alive && faces_[i].name == name) return i;
  return -1;
}

std::vector<int> SurfaceComplex::live_faces() const {
  std::vector<int> r;
  for (int i = 0; i < num_faces(); ++i)
    if (faces_[i].alive) r.push_back(i);
  return r;
}

std::vector<int> SurfaceComplex::live_slots() const {
  std::vector<int> r;
  for (int i = 0; i < num_slots(); ++i)
    if (slots_[i].alive) r.push_back(i);
  return r;
}

int SurfaceComplex::next_in_face(int s) const {
  const Face& f = faces_[slots_[s].face];
  return f.slots[(slots_[s].pos + 1) % f.slots.size()];
}

int SurfaceComplex::prev_in_face(int s) const {
  const Face& f = faces_[slots_[s].face];
  return f.slots[(slots_[s].pos + f.slots.size() - 1) % f.slots.size()];
}

int SurfaceComplex::next_boundary_slot(int s) const {
  int j = next_in_face(s);
  int guard = 0;
  while (slots_[j].partner >= 0) {
    j = next_in_face(slots_[j].partner);
    if (++guard > num_slots() + 8) throw std::runtime_error("boundary walk does not close");
  }
  return j;
}

int SurfaceComplex::prev_boundary_slot(int s) const {
  int j = prev_in_face(s);
  int guard = 0;
  while (slots_[j].partner >= 0) {
    j = prev_in_face(slots_[j].partner);
    if (++guard > num_slots() + 8) throw std::runtime_error("boundary walk does not close");
  }
  return j;
}

// --- vertices ---

VertexMap::VertexMap(const SurfaceComplex& c) : c_(c) {
  corner_of_slot_tail_.assign(c.num_slots(), -1);
  int n = 0;
  for (int fi : c.live_faces())
    for (int s : c.face(fi).slots) corner_of_slot_tail_[s] = n++;
  parent_.resize(n);
  for (int i = 0; i < n; ++i) parent_[i] = i;

  auto uni = [&](int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  };
  for (int s : c.live_slots()) {
    int p = c.slot(s).partner;
    if (p < 0 || p < s) continue;  // each edge once
    int tail_s = corner_of_slot_tail_[s];
    int head_s = corner_of_slot_tail_[c.next_in_face(s)];
    int tail_p = corner_of_slot_tail_[p];
    int head_p = corner_of_slot_tail_[c.next_in_face(p)];
    if (!c.slot(s).aligned) {
      uni(tail_s, head_p);
      uni(head_s, tail_p);
    } else {
      uni(tail_s, tail_p);
      uni(head_s, head_p);
    }
  }
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  count_ = static_cast<int>(roots.size());
}

int VertexMap::find(int x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

int VertexMap::vertex_of_tail(int slot) const { return find(corner_of_slot_tail_[slot]); }
int VertexMap::vertex_of_head(int slot) const {
  return find(corner_of_slot_tail_[c_.next_in_face(slot)]);
}

int SurfaceComplex::num_vertices() const { return VertexMap(*this).count(); }

int SurfaceComplex::num_edges() const {
  int boundary = 0, interior = 0;
  for (int s : live_slots()) {
    if (slots_[s].partner < 0)
      ++boundary;
    else
      ++interior;
  }
  return boundary + interior / 2;
}

int SurfaceComplex::euler_characteristic() const {
  return num_vertices() - num_edges() + static_cast<int>(live_faces().size());
}

std::vector<std::vector<int>> SurfaceComplex::boundary_components() const {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int s : live_slots()) {
    if (slots_[s].partner >= 0 || seen.count(s)) continue;
    std::vector<int> cyc;
    int j = s;
    do {
      cyc.push_back(j);
      seen.insert(j);
      j = next_boundary_slot(j);
    } while (j != s);
    comps.push_back(std::move(cyc));
  }
  // deterministic: order by smallest slot name in the cycle
  std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
    auto mn = [&](const std::vector<int>& v) {
      std::string m = slots_[v[0]].name;
      for (int x : v) m = std::min(m, slots_[x].name);
      return m;
    };
    return mn(a) < mn(b);
  });
  return comps;
}

std::vector<std::vector<int>> SurfaceComplex::face_components() const {
  std::map<int, int> comp;
  std::vector<int> lf = live_faces();
  int next = 0;
  for (int f : lf)
    if (!comp.count(f)) {
      std::vector<int> stack{f};
      comp[f] = next;
      while (!stack.empty()) {
        int g = stack.back();
        stack.pop_back();
        for (int s : faces_[g].slots) {
          int p = slots_[s].partner;
          if (p >= 0) {
            int h = slots_[p].face;
            if (!comp.count(h)) {
              comp[h] = next;
              stack.push_back(h);
            }
          }
        }
      }
      ++next;
    }
  std::vector<std::vector<int>> out(next);
  for (auto& [f, c] : comp) out[c].push_back(f);
  for (auto& v : out) std::sort(v.begin(), v.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return faces_[a[0]].name < faces_[b[0]].name; });
  return out;
}

std::vector<SurfaceComplex::BoundaryRun> SurfaceComplex::boundary_runs(bool split_by_class) const {
  std::vector<BoundaryRun> runs;
  for (const auto& comp : boundary_components()) {
    // find a run start: a junction with a mark or type/class change
    int n = static_cast<int>(comp.size());
    auto breaks_before = [&](int idx) {
      int s = comp[idx];
      int p = comp[(idx + n - 1) % n];
      if (slots_[s].mark_before) return true;
      if (slots_[s].type != slots_[p].type) return true;
      if (split_by_class && slots_[s].type == BoundaryType::Leaf &&
          slots_[s].leaf_class != slots_[p].leaf_class)
        return true;
      return false;
    };
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (breaks_before(i)) {
        start = i;
        break;
      }
    if (start < 0) {
      BoundaryRun r;
      r.type = slots_[comp[0]].type;
      r.leaf_class = slots_[comp[0]].leaf_class;
      r.slots = comp;
      r.closed = true;
      runs.push_back(std::move(r));
      continue;
    }
    int i = start;
    do {
      BoundaryRun r;
      r.type = slots_[comp[i]].type;
      r.leaf_class = slots_[comp[i]].leaf_class;
      r.start_mark = slots_[comp[i]].mark_before;
      do {
        r.slots.push_back(comp[i]);
        i = (i + 1) % n;
      } while (i != start && !breaks_before(i));
      r.end_mark = slots_[comp[i]].mark_before;
      runs.push_back(std::move(r));
    } while (i != start);
  }
  return runs;
}

std::vector<std::string> SurfaceComplex::reclass_leaves(const std::string& fresh_prefix) {
  // current class -> set of slots carrying it
  std::map<std::string, std::set<int>> by_class;
  for (int s : live_slots())
    if (slots_[s].partner < 0 && slots_[s].type == BoundaryType::Leaf && !slots_[s].leaf_class.empty())
      by_class[slots_[s].leaf_class].insert(s);

  std::vector<std::string> fresh;
  char suffix = 'A';
  for (auto& r : boundary_runs(/*split_by_class=*/false)) {
    if (r.type != BoundaryType::Leaf) continue;
    std::set<int> run_set(r.slots.begin(), r.slots.end());
    const std::string& cls = slots_[r.slots[0]].leaf_class;
    bool keep = !cls.empty();
    if (keep) {
      for (int s : r.slots)
        if (slots_[s].leaf_class != cls) keep = false;
      if (keep && by_class[cls] != run_set) keep = false;
    }
    if (!keep) {
      std::string name = fresh_prefix + "." + std::string(1, suffix++);
      if (suffix > 'Z') throw std::runtime_error("reclass_leaves: too many fresh classes");
      for (int s : r.slots) slots_[s].leaf_class = name;
      fresh.push_back(name);
    }
  }
  return fresh;
}

ValidationReport SurfaceComplex::validate() const {
  ValidationReport rep;
  for (int s : live_slots()) {
    const Slot& sl = slots_[s];
    if (sl.partner >= 0) {
      if (sl.partner == s) rep.add("orientation", sl.name, "slot glued to itself");
      else if (slots_[sl.partner].partner != s)
        rep.add("gluing", sl.name, "gluing is not an involution");
      if (sl.aligned)
        rep.add("orientation", sl.name, "orientation-preserving gluing breaks orientability");
      if (sl.type != BoundaryType::Interior)
        rep.add("typing", sl.name, "interior slot carries boundary typing");
    } else {
      if (sl.type == BoundaryType::Interior)
        rep.add("typing", sl.name, "boundary slot lacks Binding/Leaf typing");
      if (sl.type == BoundaryType::Leaf && sl.leaf_class.empty())
        rep.add("typing", sl.name, "leaf slot lacks a leaf class");
      if (sl.type == BoundaryType::Binding && !sl.leaf_class.empty())
        rep.add("typing", sl.name, "binding slot carries a leaf class");
      if (sl.mark_before && sl.mark_before->sign * sl.mark_before->sign != 1)
        rep.add("marks", sl.name, "corner mark must be signed +1/-1");
    }
    if (sl.partner < 0 && sl.aligned) rep.add("gluing", sl.name, "aligned flag on boundary slot");
  }
  if (!rep.ok()) return rep;  // structural breakage makes later checks unreliable

  // junction / mark discipline
  std::map<std::string, int> mark_uses;
  for (const auto& comp : boundary_components()) {
    int n = static_cast<int>(comp.size());
    bool any_mark = false;
    for (int i = 0; i < n; ++i) {
      int s = comp[i], p = comp[(i + n - 1) % n];
      bool same = slots_[s].type == slots_[p].type &&
                  (slots_[s].type != BoundaryType::Leaf ||
                   slots_[s].leaf_class == slots_[p].leaf_class);
      bool marked = slots_[s].mark_before.has_value();
      if (marked) {
        any_mark = true;
        mark_uses[slots_[s].mark_before->name]++;
        int want = slots_[s].type == BoundaryType::Leaf ? +1 : -1;
        if (slots_[s].mark_before->sign != want)
          rep.add("marks", slots_[s].name,
                  slots_[s].type == BoundaryType::Leaf
                      ? "leaf run must start at a positive elliptic mark"
                      : "binding run must start at a negative elliptic mark");
        int want_prev = slots_[p].type == BoundaryType::Leaf ? -1 : +1;
        if (slots_[s].mark_before->sign != want_prev)
          rep.add("marks", slots_[p].name,
                  slots_[p].type == BoundaryType::Leaf
                      ? "leaf run must end at a negative elliptic mark"
                      : "binding run must end at a positive elliptic mark");
      }
      if (same && marked)
        rep.add("marks", slots_[s].name, "corner mark interior to a single run");
      if (!same && !marked)
        rep.add("marks", slots_[s].name,
                "run junction lacks its elliptic corner mark");
    }
    if (!any_mark) {
      bool all_binding = true, all_leaf = true;
      for (int s : comp) {
        if (slots_[s].type != BoundaryType::Binding) all_binding = false;
        if (slots_[s].type != BoundaryType::Leaf) all_leaf = false;
      }
      if (all_leaf)
        rep.add("closed-leaf", slots_[comp[0]].name,
                "Leaf run must carry elliptic corner marks at its ends unless the whole "
                "component is one closed leaf -- closed leaves are forbidden");
      else if (!all_binding)
        rep.add("marks", slots_[comp[0]].name, "mixed unmarked boundary component");
    }
  }
  for (auto& [name, uses] : mark_uses)
    if (uses > 1) rep.add("marks", name, "elliptic mark appears at several corners");

  // leaf classes contiguous
  std::map<std::string, int> class_runs;
  for (const auto& r : boundary_runs())
    if (r.type == BoundaryType::Leaf && !slots_[r.slots[0]].leaf_class.empty())
      class_runs[slots_[r.slots[0]].leaf_class]++;
  for (auto& [cls, cnt] : class_runs)
    if (cnt > 1) rep.add("leaf-class", cls, "leaf class split across several runs");

  // per-component genus census
  auto fcomps = face_components();
  std::map<int, int> face_comp;
  for (int c = 0; c < static_cast<int>(fcomps.size()); ++c)
    for (int f : fcomps[c]) face_comp[f] = c;
  std::vector<int> chi(fcomps.size(), 0), bnd(fcomps.size(), 0);
  VertexMap vm(*this);
  std::map<int, std::set<int>> comp_vertices;
  for (int c = 0; c < static_cast<int>(fcomps.size()); ++c) chi[c] = static_cast<int>(fcomps[c].size());
  for (int s : live_slots()) {
    int c = face_comp[slots_[s].face];
    comp_vertices[c].insert(vm.vertex_of_tail(s));
    if (slots_[s].partner < 0)
      chi[c] -= 1;  // boundary edge
    else if (slots_[s].partner > s)
      chi[c] -= 1;  // interior edge counted once
  }
  for (auto& [c, vs] : comp_vertices) chi[c] += static_cast<int>(vs.size());
  for (const auto& comp : boundary_components()) bnd[face_comp[slots_[comp[0]].face]]++;
  for (int c = 0; c < static_cast<int>(fcomps.size()); ++c) {
    int g2 = 2 - chi[c] - bnd[c];
    if (g2 < 0 || g2 % 2 != 0)
      rep.add("census", faces_[fcomps[c][0]].name,
              "component fails the orientable genus census (chi=" + std::to_string(chi[c]) +
                  ", boundary=" + std::to_string(bnd[c]) + ")");
  }
  return rep;
}

// --- surgeries ---

std::vector<int> SurfaceComplex::split_boundary_slot(int s, const std::vector<Rational>& cuts) {
  if (slots_[s].partner >= 0) throw std::runtime_error("split_boundary_slot: interior slot");
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (!(Rational(0) < cuts[i] && cuts[i] < Rational(1)))
      throw std::runtime_error("split position out of range");
    if (i > 0 && !(cuts[i - 1] < cuts[i])) throw std::runtime_error("split positions not increasing");
  }
  if (cuts.empty()) return {s};
  Slot base = slots_[s];
  Face& f = faces_[base.face];
  std::vector<int> pieces;
  std::vector<Rational> bounds;
  bounds.push_back(Rational(0));
  for (auto& c : cuts) bounds.push_back(c);
  bounds.push_back(Rational(1));
  Rational width = base.prov.hi - base.prov.lo;
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    Slot piece = base;
    piece.name = base.name + "#" + std::to_string(i + 1);
    piece.prov.lo = base.prov.lo + width * bounds[i];
    piece.prov.hi = base.prov.lo + width * bounds[i + 1];
    if (i > 0) piece.mark_before.reset();
    int idx = static_cast<int>(slots_.size());
    slots_.push_back(piece);
    pieces.push_back(idx);
  }
  // splice into face
  auto it = std::find(f.slots.begin(), f.slots.end(), s);
  it = f.slots.erase(it);
  f.slots.insert(it, pieces.begin(), pieces.end());
  slots_[s].alive = false;
  for (size_t i = 0; i < f.slots.size(); ++i) slots_[f.slots[i]].pos = static_cast<int>(i);
  return pieces;
}

std::vector<int> SurfaceComplex::split_interior_edge(int s, const Rational& cut) {
  int p = slots_[s].partner;
  if (p < 0) throw std::runtime_error("split_interior_edge: boundary slot");
  if (!(Rational(0) < cut && cut < Rational(1))) throw std::runtime_error("split position out of range");
  auto mk = [&](int src, const Rational& lo, const Rational& hi, int which) {
    Slot piece = slots_[src];
    piece.name = slots_[src].name + "#" + std::to_string(which);
    Rational w = piece.prov.hi - piece.prov.lo;
    Rational nlo = piece.prov.lo + w * lo, nhi = piece.prov.lo + w * hi;
    piece.prov.lo = nlo;
    piece.prov.hi = nhi;
    if (!(lo == Rational(0))) piece.mark_before.reset();
    int idx = static_cast<int>(slots_.size());
    slots_.push_back(piece);
    return idx;
  };
  int s1 = mk(s, Rational(0), cut, 1);
  int s2 = mk(s, cut, Rational(1), 2);
  Rational mirror = Rational(1) - cut;
  int p1 = mk(p, Rational(0), mirror, 1);
  int p2 = mk(p, mirror, Rational(1), 2);
  slots_[s1].partner = p2;
  slots_[p2].partner = s1;
  slots_[s2].partner = p1;
  slots_[p1].partner = s2;
  auto splice = [&](int old, int a, int b) {
    Face& f = faces_[slots_[old].face];
    auto it = std::find(f.slots.begin(), f.slots.end(), old);
    it = f.slots.erase(it);
    std::vector<int> two{a, b};
    f.slots.insert(it, two.begin(), two.end());
    slots_[old].alive = false;
    for (size_t i = 0; i < f.slots.size(); ++i) slots_[f.slots[i]].pos = static_cast<int>(i);
  };
  splice(s, s1, s2);
  splice(p, p1, p2);
  return {s1, s2};
}

std::pair<int, int> SurfaceComplex::split_face(int fi, int corner_a, int corner_b,
                                               const std::string& edge_name) {
  Face old = faces_[fi];
  int n = static_cast<int>(old.slots.size());
  if (corner_a == corner_b) throw std::runtime_error("split_face: equal corners");
  auto collect = [&](int from, int to) {
    std::vector<int> r;
    for (int i = from; i != to; i = (i + 1) % n) r.push_back(old.slots[i]);
    return r;
  };
  std::vector<int> part1 = collect(corner_a, corner_b);  // tails a..b-1, head of last = corner b
  std::vector<int> part2 = collect(corner_b, corner_a);
  if (part1.empty() || part2.empty()) throw std::runtime_error("split_face: degenerate chord");

  Slot e1;  // runs corner b -> corner a, closing face 1
  e1.name = edge_name + "~1";
  Slot e2;  // runs corner a -> corner b, closing face 2
  e2.name = edge_name + "~2";
  e1.prov.root = e1.name;
  e2.prov.root = e2.name;
  int ie1 = static_cast<int>(slots_.size());
  slots_.push_back(e1);
  int ie2 = static_cast<int>(slots_.size());
  slots_.push_back(e2);
  slots_[ie1].partner = ie2;
  slots_[ie2].partner = ie1;

  Face f1;
  f1.name = old.name + "<" + edge_name;
  f1.slots = part1;
  f1.slots.push_back(ie1);
  Face f2;
  f2.name = old.name + ">" + edge_name;
  f2.slots = part2;
  f2.slots.push_back(ie2);
  int if1 = static_cast<int>(faces_.size());
  faces_.push_back(f1);
  int if2 = static_cast<int>(faces_.size());
  faces_.push_back(f2);
  for (size_t i = 0; i < faces_[if1].slots.size(); ++i) {
    slots_[faces_[if1].slots[i]].face = if1;
    slots_[faces_[if1].slots[i]].pos = static_cast<int>(i);
  }
  for (size_t i = 0; i < faces_[if2].slots.size(); ++i) {
    slots_[faces_[if2].slots[i]].face = if2;
    slots_[faces_[if2].slots[i]].pos = static_cast<int>(i);
  }
  faces_[fi].alive = false;
  return {ie1, ie2};
}

void SurfaceComplex::cut_edges(const std::vector<int>& path_slots, const std::string& event_name) {
  int k = static_cast<int>(path_slots.size());
  for (int i = 0; i < k; ++i) {
    int s = path_slots[i];
    int p = slots_[s].partner;
    if (p < 0) throw std::runtime_error("cut_edges: boundary slot in path");
    slots_[s].partner = -1;
    slots_[p].partner = -1;
    for (int side = 0; side < 2; ++side) {
      Slot& sl = slots_[side == 0 ? s : p];
      sl.type = BoundaryType::Leaf;
      sl.leaf_class.clear();
      sl.prov.root = event_name + (side == 0 ? ".cutA" : ".cutB");
      sl.prov.lo = Rational(i, k);
      sl.prov.hi = Rational(i + 1, k);
    }
  }
  reclass_leaves(event_name);
}

std::vector<int> SurfaceComplex::attach_square(int foot1, int foot2, BoundaryType side_type,
                                               const std::string& event_name) {
  if (slots_[foot1].partner >= 0 || slots_[foot2].partner >= 0)
    throw std::runtime_error("attach_square: foot not on boundary");
  if (foot1 == foot2) throw std::runtime_error("attach_square: feet overlap");
  int fi = add_face(event_name + ".H", {event_name + ".foot1g", event_name + ".side1",
                                        event_name + ".foot2g", event_name + ".side2"});
  const Face& f = faces_[fi];
  int h0 = f.slots[0], h1 = f.slots[1], h2 = f.slots[2], h3 = f.slots[3];
  slots_[h0].partner = foot1;
  slots_[foot1].partner = h0;
  slots_[foot1].type = BoundaryType::Interior;
  slots_[foot1].leaf_class.clear();
  slots_[h2].partner = foot2;
  slots_[foot2].partner = h2;
  slots_[foot2].type = BoundaryType::Interior;
  slots_[foot2].leaf_class.clear();
  slots_[h1].type = side_type;
  slots_[h3].type = side_type;
  if (side_type == BoundaryType::Leaf) reclass_leaves(event_name);
  return {h0, h1, h2, h3};
}

std::pair<int, Rational> SurfaceComplex::resolve_on_root(const std::string& root,
                                                         const Rational& pos) const {
  for (int s : live_slots()) {
    const Slot& sl = slots_[s];
    if (sl.partner >= 0 || sl.prov.root != root) continue;
    if (sl.prov.lo < pos && pos < sl.prov.hi)
      return {s, (pos - sl.prov.lo) / (sl.prov.hi - sl.prov.lo)};
  }
  throw std::runtime_error("cannot resolve boundary position " + root + "@" + pos.str() +
                           " (absent, interior, or at a breakpoint)");
}

std::vector<SurfaceComplex::RunWord> SurfaceComplex::canonical_boundary() const {
  std::vector<RunWord> out;
  for (const auto& comp : boundary_components()) {
    (void)comp;
  }
  for (const auto& r : boundary_runs()) (void)r;
  // group runs by boundary component
  auto comps = boundary_components();
  for (const auto& comp : comps) {
    std::set<int> in_comp(comp.begin(), comp.end());
    std::vector<std::string> word;
    for (const auto& r : boundary_runs()) {
      if (!in_comp.count(r.slots[0])) continue;
      std::string w;
      if (r.start_mark)
        w += (r.start_mark->sign > 0 ? "+" : "-") + r.start_mark->name + "|";
      if (r.type == BoundaryType::Binding) {
        w += "B:";
        std::string last;
        for (int s : r.slots)
          if (slots_[s].prov.root != last) {
            w += slots_[s].prov.root + ",";
            last = slots_[s].prov.root;
          }
      } else {
        w += "L";
      }
      word.push_back(w);
    }
    // canonical rotation
    std::vector<std::string> best = word;
    for (size_t k = 1; k < word.size(); ++k) {
      std::rotate(word.begin(), word.begin() + 1, word.end());
      if (word < best) best = word;
    }
    out.push_back({best});
  }
  std::sort(out.begin(), out.end(), [](const RunWord& a, const RunWord& b) { return a.word < b.word; });
  return out;
}

}  // namespace fob
