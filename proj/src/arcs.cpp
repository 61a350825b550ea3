#include "fob/arcs.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fob {

namespace {

// linear key for the cyclic order of portals around a face boundary
using PKey = std::pair<int, Rational>;

PKey portal_key(const SurfaceComplex& c, const Portal& p) {
  return {c.slot(p.slot).pos, p.pos};
}

// x strictly inside the cyclic open interval (a, b)
bool in_cyclic(const PKey& x, const PKey& a, const PKey& b) {
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

bool chords_cross(const SurfaceComplex& c, const Portal& p1, const Portal& q1, const Portal& p2,
                  const Portal& q2) {
  PKey a = portal_key(c, p1), b = portal_key(c, q1);
  PKey u = portal_key(c, p2), v = portal_key(c, q2);
  if (a == u || a == v || b == u || b == v) return false;  // shared endpoint
  bool u_in = in_cyclic(u, a, b), v_in = in_cyclic(v, a, b);
  return u_in != v_in;
}

Portal mirror_portal(const SurfaceComplex& c, const Portal& p) {
  Portal m;
  m.is_end = false;
  m.slot = c.slot(p.slot).partner;
  m.pos = Rational(1) - p.pos;
  return m;
}

int visit_count(const NormalArc& a) { return static_cast<int>(a.visits.size()); }

// all crossing-portal positions currently present on a slot, across the system
std::vector<Rational> positions_on_slot(const System& sys, int slot) {
  std::vector<Rational> out;
  for (const auto& sa : sys.arcs)
    for (const auto& v : sa.arc.visits) {
      if (!v.in.is_end && v.in.slot == slot) out.push_back(v.in.pos);
      if (!v.out.is_end && v.out.slot == slot) out.push_back(v.out.pos);
    }
  return out;
}

// fresh position just beyond `target`, moving away from `from`
Rational beyond_position(const System& sys, int slot, const Rational& from, const Rational& target) {
  auto all = positions_on_slot(sys, slot);
  if (target > from) {
    Rational next(1);
    for (auto& p : all)
      if (p > target && p < next) next = p;
    return Rational::mid(target, next);
  }
  Rational next(0);
  for (auto& p : all)
    if (p < target && p > next) next = p;
  return Rational::mid(target, next);
}

}  // namespace

NormalArc NormalArc::reversed() const {
  NormalArc r = *this;
  std::reverse(r.visits.begin(), r.visits.end());
  for (auto& v : r.visits) std::swap(v.in, v.out);
  return r;
}

int System::find(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    if (arcs[i].arc.name == name) return i;
  return -1;
}

void validate_arc(const SurfaceComplex& c, const NormalArc& a) {
  if (a.visits.empty()) {
    if (!a.closed) throw std::runtime_error("arc " + a.name + " has no visits");
    return;  // null closed curve
  }
  int n = visit_count(a);
  for (int i = 0; i < n; ++i) {
    const Visit& v = a.visits[i];
    for (const Portal* p : {&v.in, &v.out}) {
      if (p->slot < 0 || p->slot >= c.num_slots() || !c.slot(p->slot).alive)
        throw std::runtime_error("arc " + a.name + " references a dead slot");
      if (c.slot(p->slot).face != v.face)
        throw std::runtime_error("arc " + a.name + " portal off its visit face");
      if (p->is_end && c.slot(p->slot).partner >= 0)
        throw std::runtime_error("arc " + a.name + " endpoint on an interior slot");
      if (!p->is_end && c.slot(p->slot).partner < 0)
        throw std::runtime_error("arc " + a.name + " crossing on a boundary slot");
      if (!(Rational(0) < p->pos && p->pos < Rational(1)))
        throw std::runtime_error("arc " + a.name + " portal position out of range");
    }
    bool last = i == n - 1;
    if (!last || a.closed) {
      const Visit& w = a.visits[(i + 1) % n];
      if (v.out.is_end || w.in.is_end)
        throw std::runtime_error("arc " + a.name + " interior endpoint");
      if (c.slot(v.out.slot).partner != w.in.slot || !(w.in.pos == Rational(1) - v.out.pos))
        throw std::runtime_error("arc " + a.name + " inconsistent consecutive visits");
    }
  }
  if (!a.closed) {
    if (!a.visits.front().in.is_end || !a.visits.back().out.is_end)
      throw std::runtime_error("arc " + a.name + " open arc must end on boundary");
  }
}

std::vector<CrossingRef> system_crossings(const SurfaceComplex& c, const System& sys) {
  std::vector<CrossingRef> out;
  int na = static_cast<int>(sys.arcs.size());
  for (int ia = 0; ia < na; ++ia)
    for (int ib = ia; ib < na; ++ib) {
      const NormalArc& A = sys.arcs[ia].arc;
      const NormalArc& B = sys.arcs[ib].arc;
      for (int va = 0; va < visit_count(A); ++va) {
        int vb0 = (ia == ib) ? va + 1 : 0;
        for (int vb = vb0; vb < visit_count(B); ++vb) {
          if (A.visits[va].face != B.visits[vb].face) continue;
          if (chords_cross(c, A.visits[va].in, A.visits[va].out, B.visits[vb].in,
                           B.visits[vb].out))
            out.push_back({ia, va, ib, vb, A.visits[va].face});
        }
      }
    }
  return out;
}

int crossing_count(const SurfaceComplex& c, const System& sys, int ia, int ib) {
  int n = 0;
  for (const auto& x : system_crossings(c, sys))
    if ((x.arc_a == ia && x.arc_b == ib) || (x.arc_a == ib && x.arc_b == ia)) ++n;
  return n;
}

// ---------- reduction ----------

namespace {

bool remove_one_backtrack(const SurfaceComplex&, System& sys) {
  for (auto& sa : sys.arcs) {
    NormalArc& a = sa.arc;
    int n = visit_count(a);
    for (int i = 0; i < n; ++i) {
      const Visit& v = a.visits[i];
      if (v.in.is_end || v.out.is_end || v.in.slot != v.out.slot) continue;
      // splice across the partner face
      if (!a.closed) {
        Visit merged;
        merged.face = a.visits[i - 1].face;
        merged.in = a.visits[i - 1].in;
        merged.out = a.visits[i + 1].out;
        a.visits.erase(a.visits.begin() + i - 1, a.visits.begin() + i + 2);
        a.visits.insert(a.visits.begin() + i - 1, merged);
      } else {
        if (n == 1) {
          a.visits.clear();  // trivial curve
          return true;
        }
        int prev = (i + n - 1) % n, next = (i + 1) % n;
        if (prev == next) {  // two-visit cycle collapses to a trivial curve
          a.visits.clear();
          return true;
        }
        Visit merged;
        merged.face = a.visits[prev].face;
        merged.in = a.visits[prev].in;
        merged.out = a.visits[next].out;
        std::vector<Visit> nv;
        for (int k = 0; k < n; ++k)
          if (k != i && k != prev && k != next) nv.push_back(a.visits[k]);
        nv.push_back(merged);
        a.visits = std::move(nv);
      }
      return true;
    }
  }
  return false;
}

struct WalkStep {
  int slot;          // shared exit slot (on the current face)
  Rational a_pos, b_pos;
};

struct BigonFound {
  int arc_a, arc_b;
  int da, db;
  int ia_open, ib_open;    // visit indices at the opening
  bool open_at_endpoint;   // opening is a shared endpoint, not a crossing
  std::vector<WalkStep> steps;
  int ia_close, ib_close;  // visit indices of the closing crossing, or -1 if closes at endpoint
  bool close_at_endpoint;
};

int step_index(const NormalArc& a, int i, int d) {
  int n = visit_count(a);
  if (a.closed) return ((i + d) % n + n) % n;
  int j = i + d;
  return (j < 0 || j >= n) ? -1 : j;
}

const Portal& fwd_portal(const NormalArc& a, int i, int d) {
  return d > 0 ? a.visits[i].out : a.visits[i].in;
}

// Walk a candidate strip between arcs a and b. Returns a bigon when the two
// paths run through the same edge sequence and then close up at a crossing or
// at a shared endpoint.
std::optional<BigonFound> walk_strip(const SurfaceComplex& c, const System& sys, int arc_a,
                                     int ia, int da, int arc_b, int ib, int db,
                                     bool open_at_endpoint) {
  const NormalArc& A = sys.arcs[arc_a].arc;
  const NormalArc& B = sys.arcs[arc_b].arc;
  BigonFound bg{arc_a, arc_b, da, db, ia, ib, open_at_endpoint, {}, -1, -1, false};
  int cap = 4 * (visit_count(A) + visit_count(B)) + 8;
  int cia = ia, cib = ib;
  for (int guard = 0; guard < cap; ++guard) {
    const Portal& pa = fwd_portal(A, cia, da);
    const Portal& pb = fwd_portal(B, cib, db);
    if (pa.is_end && pb.is_end) {
      if (pa.slot == pb.slot && pa.pos == pb.pos && !(open_at_endpoint && bg.steps.empty())) {
        bg.close_at_endpoint = true;
        bg.ia_close = cia;
        bg.ib_close = cib;
        if (arc_a == arc_b && cia == cib) return std::nullopt;
        return bg;
      }
      return std::nullopt;
    }
    if (pa.is_end || pb.is_end) return std::nullopt;
    if (pa.slot != pb.slot) return std::nullopt;
    bg.steps.push_back({pa.slot, pa.pos, pb.pos});
    int nia = step_index(A, cia, da), nib = step_index(B, cib, db);
    if (nia < 0 || nib < 0) return std::nullopt;
    if (arc_a == arc_b && nia == nib) return std::nullopt;  // self strip folded onto itself
    cia = nia;
    cib = nib;
    // in the new face, do the chords close the strip?
    const Visit& va = A.visits[cia];
    const Visit& vb = B.visits[cib];
    if (va.face != vb.face) throw std::runtime_error("strip walk face mismatch");
    if (chords_cross(c, va.in, va.out, vb.in, vb.out)) {
      bg.close_at_endpoint = false;
      bg.ia_close = cia;
      bg.ib_close = cib;
      return bg;
    }
  }
  return std::nullopt;
}

// Rewrites arc a across the bigon so the opening/closing crossings vanish.
void flip_bigon(const SurfaceComplex& c, System& sys, const BigonFound& bg) {
  NormalArc& A = sys.arcs[bg.arc_a].arc;
  const NormalArc& B = sys.arcs[bg.arc_b].arc;
  (void)B;
  int da = bg.da;
  int m = static_cast<int>(bg.steps.size());

  // collect the replaced index range of a, in walk order
  std::vector<int> idx;
  int cur = bg.ia_open;
  idx.push_back(cur);
  for (int k = 0; k < m; ++k) {
    cur = step_index(A, cur, da);
    idx.push_back(cur);
  }
  if (idx.back() != bg.ia_close) throw std::runtime_error("flip: inconsistent walk");

  // new portals along the strip: step k gets a fresh crossing just beyond b
  std::vector<Portal> fresh(m);
  for (int k = 0; k < m; ++k) {
    Portal p;
    p.is_end = false;
    p.slot = bg.steps[k].slot;
    p.pos = beyond_position(sys, bg.steps[k].slot, bg.steps[k].a_pos, bg.steps[k].b_pos);
    fresh[k] = p;
  }

  // assemble the replacement visits, in walk order
  std::vector<Visit> repl;
  const Visit& open_v = A.visits[bg.ia_open];
  const Visit& close_v = A.visits[bg.ia_close];
  Portal open_back = da > 0 ? open_v.in : open_v.out;
  Portal close_fwd = da > 0 ? close_v.out : close_v.in;
  if (m == 0) {
    Visit v;
    v.face = open_v.face;
    v.in = open_back;
    v.out = close_fwd;
    repl.push_back(v);
  } else {
    Visit first;
    first.face = open_v.face;
    first.in = open_back;
    first.out = fresh[0];
    repl.push_back(first);
    for (int k = 1; k < m; ++k) {
      Visit v;
      v.in = mirror_portal(c, fresh[k - 1]);
      v.face = c.slot(v.in.slot).face;
      v.out = fresh[k];
      repl.push_back(v);
    }
    Visit last;
    last.in = mirror_portal(c, fresh[m - 1]);
    last.face = c.slot(last.in.slot).face;
    last.out = close_fwd;
    repl.push_back(last);
  }
  if (da < 0) {
    std::reverse(repl.begin(), repl.end());
    for (auto& v : repl) std::swap(v.in, v.out);
  }

  // replace the range [first..last] (arc order) by repl
  int lo = da > 0 ? bg.ia_open : bg.ia_close;
  if (!A.closed) {
    int hi = da > 0 ? bg.ia_close : bg.ia_open;
    A.visits.erase(A.visits.begin() + lo, A.visits.begin() + hi + 1);
    A.visits.insert(A.visits.begin() + lo, repl.begin(), repl.end());
  } else {
    // rotate so the replaced range is contiguous from `lo`
    int n = visit_count(A);
    std::rotate(A.visits.begin(), A.visits.begin() + lo, A.visits.end());
    int len = static_cast<int>(idx.size());
    A.visits.erase(A.visits.begin(), A.visits.begin() + len);
    A.visits.insert(A.visits.begin(), repl.begin(), repl.end());
    (void)n;
  }
}

bool ranges_overlap(const NormalArc& a, int open_i, int close_i, int d, int other_open,
                    int other_close, int od) {
  auto collect = [&](int from, int to, int dd) {
    std::set<int> s;
    int cur = from;
    s.insert(cur);
    int guard = 0;
    while (cur != to && guard++ <= visit_count(a)) {
      cur = step_index(a, cur, dd);
      if (cur < 0) break;
      s.insert(cur);
    }
    return s;
  };
  auto s1 = collect(open_i, close_i, d);
  auto s2 = collect(other_open, other_close, od);
  for (int x : s1)
    if (s2.count(x)) return true;
  return false;
}

bool flip_one_bigon(const SurfaceComplex& c, System& sys) {
  auto xs = system_crossings(c, sys);
  for (const auto& x : xs) {
    for (int da : {+1, -1})
      for (int db : {+1, -1}) {
        auto bg = walk_strip(c, sys, x.arc_a, x.visit_a, da, x.arc_b, x.visit_b, db, false);
        if (!bg) continue;
        if (bg->arc_a == bg->arc_b &&
            ranges_overlap(sys.arcs[bg->arc_a].arc, bg->ia_open, bg->ia_close, da, bg->ib_open,
                           bg->ib_close, db))
          continue;
        flip_bigon(c, sys, *bg);
        return true;
      }
  }
  // half-bigons from shared endpoints
  int na = static_cast<int>(sys.arcs.size());
  for (int ia = 0; ia < na; ++ia)
    for (int ib = ia; ib < na; ++ib) {
      const NormalArc& A = sys.arcs[ia].arc;
      const NormalArc& B = sys.arcs[ib].arc;
      if (A.closed || B.closed || A.visits.empty() || B.visits.empty()) continue;
      struct End {
        int visit;
        int dir;  // walking direction away from this end
        Portal p;
      };
      std::vector<End> ea = {{0, +1, A.visits.front().in},
                             {visit_count(A) - 1, -1, A.visits.back().out}};
      std::vector<End> eb = {{0, +1, B.visits.front().in},
                             {visit_count(B) - 1, -1, B.visits.back().out}};
      for (const auto& u : ea)
        for (const auto& v : eb) {
          if (ia == ib && u.visit == v.visit && u.dir == v.dir) continue;
          if (!(u.p.slot == v.p.slot && u.p.pos == v.p.pos)) continue;
          auto bg = walk_strip(c, sys, ia, u.visit, u.dir, ib, v.visit, v.dir, true);
          if (!bg) continue;
          if (bg->close_at_endpoint) continue;  // full lens = isotopic arcs, not a reduction
          if (bg->arc_a == bg->arc_b &&
              ranges_overlap(sys.arcs[bg->arc_a].arc, bg->ia_open, bg->ia_close, u.dir,
                             bg->ib_open, bg->ib_close, v.dir))
            continue;
          flip_bigon(c, sys, *bg);
          return true;
        }
    }
  return false;
}

}  // namespace

void reduce(const SurfaceComplex& c, System& sys) {
  for (auto& sa : sys.arcs) validate_arc(c, sa.arc);
  int cap = 20000;
  while (cap-- > 0) {
    if (remove_one_backtrack(c, sys)) continue;
    if (flip_one_bigon(c, sys)) continue;
    for (auto& sa : sys.arcs) validate_arc(c, sa.arc);
    return;
  }
  throw std::runtime_error("reduce did not terminate");
}

// ---------- homotopy words ----------

std::vector<std::pair<int, int>> arc_word(const SurfaceComplex& c, const NormalArc& a) {
  std::vector<std::pair<int, int>> w;
  int n = visit_count(a);
  int last = a.closed ? n : n - 1;
  for (int i = 0; i < last; ++i) {
    const Portal& out = a.visits[i].out;
    int p = c.slot(out.slot).partner;
    int edge = std::min(out.slot, p);
    int sign = out.slot == edge ? +1 : -1;
    if (!w.empty() && w.back().first == edge && w.back().second == -sign)
      w.pop_back();
    else
      w.emplace_back(edge, sign);
  }
  return w;
}

namespace {
std::vector<std::pair<int, int>> inverse_word(std::vector<std::pair<int, int>> w) {
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.second = -l.second;
  return w;
}
std::vector<std::pair<int, int>> cyclic_reduce(std::vector<std::pair<int, int>> w) {
  while (w.size() >= 2 && w.front().first == w.back().first &&
         w.front().second == -w.back().second) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}
}  // namespace

bool same_class_rel_endpoints(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b) {
  if (a.closed || b.closed) return false;
  if (a.visits.empty() || b.visits.empty()) return false;
  Portal as = a.visits.front().in, ae = a.visits.back().out;
  Portal bs = b.visits.front().in, be = b.visits.back().out;
  auto wa = arc_word(c, a);
  if (as.same_point(bs) && ae.same_point(be)) return wa == arc_word(c, b);
  if (as.same_point(be) && ae.same_point(bs)) return wa == inverse_word(arc_word(c, b));
  return false;
}

bool same_closed_class(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b) {
  if (!a.closed || !b.closed) return false;
  auto wa = cyclic_reduce(arc_word(c, a));
  auto wb = cyclic_reduce(arc_word(c, b));
  if (wa.size() != wb.size()) return false;
  if (wa.empty()) return true;
  for (size_t r = 0; r < wb.size(); ++r) {
    std::rotate(wb.begin(), wb.begin() + 1, wb.end());
    if (wa == wb) return true;
  }
  return false;
}

// ---------- public queries ----------

namespace {

// Put copies of the arcs in one scratch system with collision-free positions.
// Each arc's own strand order on every edge is preserved (an order-preserving
// remap is an isotopy of that arc); the two arcs' blocks are stacked, which is
// some position of the pair -- reduce() then finds the minimal one.
System scratch_pair(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b) {
  System sys;
  sys.arcs.push_back({a, "a"});
  sys.arcs.push_back({b, "b"});
  struct XRef {
    int arc, visit;
    Rational canon_pos;
  };
  std::map<int, std::vector<XRef>> by_edge;  // canonical slot -> crossings
  for (int t = 0; t < 2; ++t) {
    NormalArc& arc = sys.arcs[t].arc;
    int n = visit_count(arc);
    int last = arc.closed ? n : n - 1;
    for (int i = 0; i < last; ++i) {
      const Portal& out = arc.visits[i].out;
      int canon = std::min(out.slot, c.slot(out.slot).partner);
      Rational cp = out.slot == canon ? out.pos : Rational(1) - out.pos;
      by_edge[canon].push_back({t, i, cp});
    }
  }
  for (auto& [canon, xs] : by_edge) {
    std::stable_sort(xs.begin(), xs.end(), [](const XRef& x, const XRef& y) {
      if (x.arc != y.arc) return x.arc < y.arc;
      return x.canon_pos < y.canon_pos;
    });
    int total = static_cast<int>(xs.size());
    for (int k = 0; k < total; ++k) {
      NormalArc& arc = sys.arcs[xs[k].arc].arc;
      int n = visit_count(arc);
      Rational pos(k + 1, total + 1);
      Portal& out = arc.visits[xs[k].visit].out;
      if (out.slot != canon) pos = Rational(1) - pos;
      out.pos = pos;
      arc.visits[(xs[k].visit + 1) % n].in.pos = Rational(1) - pos;
    }
  }
  return sys;
}

}  // namespace

int geometric_intersection(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b) {
  if (!a.closed && !b.closed && same_class_rel_endpoints(c, a, b)) return 0;
  if (a.closed && b.closed && same_closed_class(c, a, b)) return 0;
  System sys = scratch_pair(c, a, b);
  reduce(c, sys);
  return crossing_count(c, sys, 0, 1);
}

bool isotopic(const SurfaceComplex& c, const NormalArc& a, const NormalArc& b) {
  if (a.closed != b.closed) return false;
  return a.closed ? same_closed_class(c, a, b) : same_class_rel_endpoints(c, a, b);
}

Side is_left_of_at(const SurfaceComplex& c, const NormalArc& delta, const NormalArc& gamma,
                   int endpoint_slot, const Rational& endpoint_pos) {
  if (isotopic(c, delta, gamma)) return Side::Equal;
  System sys = scratch_pair(c, delta, gamma);
  reduce(c, sys);
  auto oriented_from = [&](NormalArc a) {
    if (a.visits.front().in.is_end && a.visits.front().in.slot == endpoint_slot &&
        a.visits.front().in.pos == endpoint_pos)
      return a;
    if (a.visits.back().out.is_end && a.visits.back().out.slot == endpoint_slot &&
        a.visits.back().out.pos == endpoint_pos)
      return a.reversed();
    throw std::runtime_error("is_left_of_at: arc does not end at the given point");
  };
  NormalArc d = oriented_from(sys.arcs[0].arc);
  NormalArc g = oriented_from(sys.arcs[1].arc);
  if (d.visits.front().face != g.visits.front().face)
    throw std::runtime_error("is_left_of_at: endpoint faces differ");
  Portal p = d.visits.front().in;
  PKey kp = portal_key(c, p);
  PKey kd = portal_key(c, d.visits.front().out);
  PKey kg = portal_key(c, g.visits.front().out);
  if (kd == kg) throw std::runtime_error("is_left_of_at: coincident germs after reduction");
  // earlier in ccw order from the endpoint = to the right
  bool d_first = in_cyclic(kd, kp, kg);
  return d_first ? Side::Right : Side::Left;
}

ArcOrder compare_arcs(const SurfaceComplex& c, const NormalArc& delta, const NormalArc& gamma) {
  if (delta.closed || gamma.closed) throw std::runtime_error("compare: closed input");
  Portal d1 = delta.visits.front().in, d2 = delta.visits.back().out;
  Portal g1 = gamma.visits.front().in, g2 = gamma.visits.back().out;
  bool straight = d1.same_point(g1) && d2.same_point(g2);
  bool flipped = d1.same_point(g2) && d2.same_point(g1);
  if (!straight && !flipped) throw std::runtime_error("compare: boundary mismatch");
  if (isotopic(c, delta, gamma)) return ArcOrder::LessOrEqual;
  Side s1 = is_left_of_at(c, delta, gamma, d1.slot, d1.pos);
  Side s2 = is_left_of_at(c, delta, gamma, d2.slot, d2.pos);
  if (s1 == Side::Right && s2 == Side::Right) return ArcOrder::LessOrEqual;
  if (s1 == Side::Left && s2 == Side::Left) return ArcOrder::Greater;
  return ArcOrder::Incomparable;
}

// ---------- Dehn twist ----------

NormalArc dehn_twist(const SurfaceComplex& c, const NormalArc& a, const NormalArc& curve,
                     int sign) {
  if (!curve.closed) throw std::runtime_error("dehn_twist: twist curve must be closed");
  if (sign != 1 && sign != -1) throw std::runtime_error("dehn_twist: sign must be +-1");
  System sys = scratch_pair(c, a, curve);
  reduce(c, sys);
  NormalArc base = sys.arcs[0].arc;
  NormalArc tw = sys.arcs[1].arc;
  if (tw.visits.empty()) return base;  // trivial curve
  if (sign < 0) tw = tw.reversed();
  System scan;
  scan.arcs.push_back({base, "a"});
  scan.arcs.push_back({tw, "c"});
  auto xs = system_crossings(c, scan);
  std::vector<std::vector<int>> per_visit(visit_count(base));  // curve visit indices
  for (const auto& x : xs) {
    if (x.arc_a == 0 && x.arc_b == 1)
      per_visit[x.visit_a].push_back(x.visit_b);
    else if (x.arc_a == 1 && x.arc_b == 0)
      per_visit[x.visit_b].push_back(x.visit_a);
  }
  bool any = false;
  for (auto& v : per_visit) any = any || !v.empty();
  if (!any) return base;

  int nt = visit_count(tw);
  NormalArc out;
  out.name = base.name;
  out.closed = base.closed;

  // running offset bookkeeping: fresh positions appended into this system view
  System grow = scan;  // arc 0 will be replaced progressively; crossings positions pool
  auto fresh_next_to = [&](int slot, const Rational& at, bool increasing) {
    auto all = positions_on_slot(grow, slot);
    if (increasing) {
      Rational next(1);
      for (auto& p : all)
        if (p > at && p < next) next = p;
      return Rational::mid(at, next);
    }
    Rational next(0);
    for (auto& p : all)
      if (p < at && p > next) next = p;
    return Rational::mid(at, next);
  };

  for (int i = 0; i < visit_count(base); ++i) {
    const Visit& v = base.visits[i];
    // order this visit's crossings along the chord: by cyclic distance of the
    // curve portal that lies inside (in, out)
    std::vector<int> cs = per_visit[i];
    PKey kin = portal_key(c, v.in), kout = portal_key(c, v.out);
    auto inside_key = [&](int j) {
      PKey ku = portal_key(c, tw.visits[j].in), kv = portal_key(c, tw.visits[j].out);
      PKey k = in_cyclic(ku, kin, kout) ? ku : kv;
      // cyclic distance from kin
      return k;
    };
    std::sort(cs.begin(), cs.end(), [&](int x, int y) {
      PKey kx = inside_key(x), ky = inside_key(y);
      bool xin = in_cyclic(kx, kin, ky);
      (void)xin;
      // order along the chord from `in`: compare by membership in (kin, k)
      return in_cyclic(kx, kin, ky);
    });
    Portal cur_in = v.in;
    for (int j : cs) {
      // detour start: offset copy of the curve's exit portal at visit j
      const Visit& cv = tw.visits[j];
      Portal ov;
      ov.is_end = false;
      ov.slot = cv.out.slot;
      ov.pos = fresh_next_to(cv.out.slot, cv.out.pos, true);
      Visit reach;
      reach.face = v.face;
      reach.in = cur_in;
      reach.out = ov;
      out.visits.push_back(reach);
      grow.arcs.push_back({NormalArc{"tmp", false, {reach}}, "tmp"});
      Portal prev_out = ov;
      for (int t = 1; t < nt; ++t) {
        const Visit& cw = tw.visits[(j + t) % nt];
        Visit nv;
        nv.in = mirror_portal(c, prev_out);
        nv.face = cw.face;
        nv.out.is_end = false;
        nv.out.slot = cw.out.slot;
        nv.out.pos = fresh_next_to(cw.out.slot, cw.out.pos, true);
        out.visits.push_back(nv);
        grow.arcs.push_back({NormalArc{"tmp", false, {nv}}, "tmp"});
        prev_out = nv.out;
      }
      cur_in = mirror_portal(c, prev_out);
      if (cur_in.slot != tw.visits[j].in.slot) {
        // the loop re-enters through the copy of the curve's own entry
        throw std::runtime_error("dehn_twist: detour failed to close");
      }
    }
    Visit tail;
    tail.face = v.face;
    tail.in = cur_in;
    tail.out = v.out;
    out.visits.push_back(tail);
    grow.arcs.push_back({NormalArc{"tmp", false, {tail}}, "tmp"});
  }
  System res;
  res.arcs.push_back({out, "a"});
  reduce(c, res);
  return res.arcs[0].arc;
}

// ---------- enumeration ----------

std::vector<EnumeratedArc> enumerate_arcs(const SurfaceComplex& c,
                                          const std::vector<int>& region_faces,
                                          const std::vector<int>& endpoint_slots, int bound) {
  std::set<int> region(region_faces.begin(), region_faces.end());
  std::set<int> ends(endpoint_slots.begin(), endpoint_slots.end());
  std::vector<EnumeratedArc> out;
  std::set<std::string> seen;

  // interior edges usable inside the region
  auto usable = [&](int slot) {
    int p = c.slot(slot).partner;
    return p >= 0 && region.count(c.slot(slot).face) && region.count(c.slot(p).face);
  };

  struct Frame {
    std::vector<int> exits;  // chosen exit slot per visit so far
  };

  std::vector<int> starts(ends.begin(), ends.end());
  std::sort(starts.begin(), starts.end(),
            [&](int a, int b) { return c.slot(a).name < c.slot(b).name; });

  std::vector<std::pair<std::vector<int>, std::pair<int, int>>> raw;  // exits, (start,end)

  for (int s0 : starts) {
    if (!region.count(c.slot(s0).face)) continue;
    // DFS over exit sequences
    struct State {
      int face;
      std::vector<int> exits;
    };
    std::vector<State> stack;
    stack.push_back({c.slot(s0).face, {}});
    while (!stack.empty()) {
      State st = stack.back();
      stack.pop_back();
      // candidate terminations in this face
      for (int es : ends) {
        if (c.slot(es).face != st.face) continue;
        if (st.exits.empty() && es == s0) {
          raw.push_back({st.exits, {s0, es}});  // single-visit chord on one slot or two
        } else if (!st.exits.empty() || es != s0) {
          raw.push_back({st.exits, {s0, es}});
        }
      }
      if (static_cast<int>(st.exits.size()) >= bound) continue;
      std::vector<int> face_slots = c.face(st.face).slots;
      std::sort(face_slots.begin(), face_slots.end(),
                [&](int a, int b) { return c.slot(a).name < c.slot(b).name; });
      for (int e : face_slots) {
        if (!usable(e)) continue;
        if (!st.exits.empty()) {
          int last = st.exits.back();
          if (c.slot(last).partner == e) continue;  // immediate backtrack
        }
        State nx = st;
        nx.exits.push_back(e);
        nx.face = c.slot(c.slot(e).partner).face;
        stack.push_back(nx);
      }
    }
  }

  for (auto& [exits, se] : raw) {
    auto [s0, es] = se;
    // realize with canonical positions
    NormalArc a;
    a.name = "enum";
    std::map<int, int> cnt;
    int total = static_cast<int>(exits.size());
    Portal start;
    start.is_end = true;
    start.slot = s0;
    start.pos = (s0 == es) ? Rational(1, 3) : Rational(1, 2);
    Portal cur = start;
    int cur_face = c.slot(s0).face;
    bool ok = true;
    for (int k = 0; k < total; ++k) {
      int e = exits[k];
      Visit v;
      v.face = cur_face;
      v.in = cur;
      v.out.is_end = false;
      v.out.slot = e;
      int canon = std::min(e, c.slot(e).partner);
      v.out.pos = Rational(2 * (++cnt[canon]) - 1, 2 * (total + 1));
      if (e != canon) v.out.pos = Rational(1) - v.out.pos;
      a.visits.push_back(v);
      cur = mirror_portal(c, v.out);
      cur_face = c.slot(cur.slot).face;
    }
    Visit last;
    last.face = cur_face;
    last.in = cur;
    last.out.is_end = true;
    last.out.slot = es;
    last.out.pos = (s0 == es) ? Rational(2, 3) : Rational(1, 2);
    a.visits.push_back(last);

    System sys;
    sys.arcs.push_back({a, "e"});
    try {
      reduce(c, sys);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) continue;
    const NormalArc& r = sys.arcs[0].arc;
    if (crossing_count(c, sys, 0, 0) > 0) continue;  // not embedded in this realization
    // stay inside the region after reduction
    bool inside = true;
    for (const auto& v : r.visits)
      if (!region.count(v.face)) inside = false;
    if (!inside) continue;

    std::ostringstream key;
    std::string n1 = c.slot(s0).name, n2 = c.slot(es).name;
    auto w = arc_word(c, r);
    if (n2 < n1) {
      std::swap(n1, n2);
      w = inverse_word(w);
    }
    key << n1 << "|" << n2 << "|";
    for (auto& l : w) key << l.first << (l.second > 0 ? "+" : "-") << ";";
    if (seen.count(key.str())) continue;
    seen.insert(key.str());
    EnumeratedArc ea;
    ea.arc = r;
    ea.arc.name = "arc#" + std::to_string(out.size());
    ea.crossings = static_cast<int>(r.visits.size()) - 1;
    out.push_back(ea);
  }
  std::sort(out.begin(), out.end(), [&](const EnumeratedArc& x, const EnumeratedArc& y) {
    if (x.crossings != y.crossings) return x.crossings < y.crossings;
    auto keyof = [&](const EnumeratedArc& e) {
      std::ostringstream k;
      k << c.slot(e.arc.visits.front().in.slot).name << "|"
        << c.slot(e.arc.visits.back().out.slot).name << "|";
      for (auto& l : arc_word(c, e.arc)) k << l.first << (l.second > 0 ? "+" : "-") << ";";
      return k.str();
    };
    return keyof(x) < keyof(y);
  });
  for (size_t i = 0; i < out.size(); ++i) out[i].arc.name = "arc#" + std::to_string(i);
  return out;
}

void rewrite_after_slot_split(System& sys, const SlotSplitMap& m) {
  for (auto& sa : sys.arcs)
    for (auto& v : sa.arc.visits)
      for (Portal* p : {&v.in, &v.out}) {
        if (p->slot != m.old_slot) continue;
        for (size_t i = 0; i + 1 < m.bounds.size(); ++i) {
          if (m.bounds[i] < p->pos && p->pos < m.bounds[i + 1]) {
            p->slot = m.pieces[i];
            p->pos = (p->pos - m.bounds[i]) / (m.bounds[i + 1] - m.bounds[i]);
            break;
          }
          if (p->pos == m.bounds[i] || p->pos == m.bounds[i + 1])
            throw std::runtime_error("slot split lands on an arc portal");
        }
      }
}

std::string describe_arc(const SurfaceComplex& c, const NormalArc& a) {
  std::ostringstream os;
  os << a.name << (a.closed ? " (closed)" : "") << ":";
  for (const auto& v : a.visits) {
    os << " [" << c.face(v.face).name << " ";
    auto pp = [&](const Portal& p) {
      os << (p.is_end ? "end " : "") << c.slot(p.slot).name << "@" << p.pos.str();
    };
    pp(v.in);
    os << " -> ";
    pp(v.out);
    os << "]";
  }
  return os.str();
}

}  // namespace fob
