#include <toric/lattice.hpp>

#include <toric/residue_poly.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

long cross(const LatticePoint& u, const LatticePoint& v) {
  return u.first * v.second - u.second * v.first;
}

long dot(const LatticePoint& u, const LatticePoint& v) {
  return u.first * v.first + u.second * v.second;
}

LatticePoint primitive(const LatticePoint& v) {
  long g = std::gcd(std::abs(v.first), std::abs(v.second));
  if (g == 0) throw std::invalid_argument("primitive direction of the zero vector");
  return {v.first / g, v.second / g};
}

// Half-plane split (upper first), then angle within each half: a strict
// counterclockwise order on nonzero directions starting at (1, 0).
bool ccw_less(const LatticePoint& u, const LatticePoint& v) {
  auto half = [](const LatticePoint& w) {
    return (w.second > 0 || (w.second == 0 && w.first > 0)) ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

int sign_of(long x) { return (x > 0) - (x < 0); }

}  // namespace

std::vector<HeckeQuad> enumerate_H(long n) {
  if (n <= 0) throw std::invalid_argument("determinant must be positive");
  std::vector<HeckeQuad> out;
  for (long a = 1; a <= n; ++a) {
    for (long b = 0; b < a; ++b) {
      for (long c = 0; c <= n; ++c) {
        long num = n + b * c;
        if (num % a != 0) continue;
        long d = num / a;
        if (d > c) out.push_back({a, b, c, d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IQuad> enumerate_I(long D) {
  if (D <= 0) throw std::invalid_argument("total must be positive");
  std::vector<IQuad> out;
  for (long m1 = 1; m1 < D; ++m1) {
    for (long k1 = 1; m1 * k1 < D; ++k1) {
      long rem = D - m1 * k1;
      for (long m2 = 1; m2 <= rem; ++m2) {
        if (rem % m2 == 0) out.push_back({m1, k1, m2, rem / m2});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<IQuad> thread_up(const IQuad& t) {
  if (t.m1 == t.m2) return std::nullopt;
  if (t.m1 > t.m2) return IQuad{t.m2, t.k1 + t.k2, t.m1 - t.m2, t.k1};
  return IQuad{t.m2 - t.m1, t.k2, t.m1, t.k1 + t.k2};
}

std::optional<IQuad> thread_down(const IQuad& t) {
  if (t.k1 == t.k2) return std::nullopt;
  if (t.k1 > t.k2) return IQuad{t.m1 + t.m2, t.k2, t.m1, t.k1 - t.k2};
  return IQuad{t.m2, t.k2 - t.k1, t.m1 + t.m2, t.k1};
}

std::vector<std::vector<IQuad>> threads(long D) {
  std::vector<std::vector<IQuad>> chains;
  for (const IQuad& top : enumerate_I(D)) {
    if (top.m1 != top.m2) continue;
    std::vector<IQuad> chain{top};
    while (auto next = thread_down(chain.back())) chain.push_back(*next);
    chains.push_back(std::move(chain));
  }
  return chains;
}

Sublattice Sublattice::from_hnf(long a, long b, long d) {
  if (a <= 0 || d <= 0 || b < 0 || b >= d)
    throw std::invalid_argument("not a Hermite-form triple");
  return Sublattice(a, b, d);
}

namespace {

// Extended gcd: returns g >= 0 with g = s*x + t*y.
long ext_gcd(long x, long y, long& s, long& t) {
  if (y == 0) {
    s = (x >= 0) ? 1 : -1;
    t = 0;
    return std::abs(x);
  }
  long s1, t1;
  long g = ext_gcd(y, x % y, s1, t1);
  s = t1;
  t = s1 - (x / y) * t1;
  return g;
}

long mod_positive(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

Sublattice Sublattice::from_rows(LatticePoint r1, LatticePoint r2) {
  long det = cross(r1, r2);
  if (det == 0) throw std::invalid_argument("rows are linearly dependent");
  long s, t;
  long a = ext_gcd(r1.first, r2.first, s, t);  // positive: det != 0
  long d = std::abs(det) / a;
  long b = mod_positive(s * r1.second + t * r2.second, d);
  return Sublattice(a, b, d);
}

bool Sublattice::contains(long x, long y) const {
  if (x % a_ != 0) return false;
  long m = x / a_;
  return (y - m * b_) % d_ == 0;
}

std::string Sublattice::to_string() const {
  return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[0," +
         std::to_string(d_) + "]]";
}

std::vector<Sublattice> sublattices_index_p(long p) {
  if (p <= 1) throw std::invalid_argument("index must be at least 2");
  std::vector<Sublattice> out;
  for (long b = 0; b < p; ++b) out.push_back(Sublattice::from_hnf(1, b, p));
  out.push_back(Sublattice::from_hnf(p, 0, 1));
  return out;
}

namespace {

// Counterclockwise convex hull, collinear points dropped.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;  // counterclockwise, starting at the lexicographic minimum
}

}  // namespace

std::vector<std::pair<LatticePoint, LatticePoint>> boundary_segments(const Sublattice& S) {
  long p = S.index();
  std::vector<LatticePoint> pts;
  for (long x = 0; x <= p; ++x)
    for (long y = 0; y <= p; ++y)
      if ((x != 0 || y != 0) && S.contains(x, y)) pts.push_back({x, y});

  long X = 0, Y = 0;
  for (long x = 1; x <= p; ++x)
    if (S.contains(x, 0)) {
      X = x;
      break;
    }
  for (long y = 1; y <= p; ++y)
    if (S.contains(0, y)) {
      Y = y;
      break;
    }

  std::vector<LatticePoint> hull = convex_hull(pts);
  auto find_index = [&](const LatticePoint& q) {
    auto it = std::find(hull.begin(), hull.end(), q);
    if (it == hull.end()) throw std::logic_error("axis anchor missing from hull");
    return static_cast<std::size_t>(it - hull.begin());
  };
  std::size_t yi = find_index({0, Y});
  std::size_t xi = find_index({X, 0});

  // Walking counterclockwise from (0, Y) reaches (X, 0) along the origin-side
  // chain; reverse to run from the x-axis to the y-axis.
  std::vector<LatticePoint> chain;
  for (std::size_t i = yi;; i = (i + 1) % hull.size()) {
    chain.push_back(hull[i]);
    if (i == xi) break;
  }
  std::reverse(chain.begin(), chain.end());

  // Subdivide each edge at the lattice points of S lying on it.
  std::vector<LatticePoint> refined;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const LatticePoint a = chain[i];
    const LatticePoint b = chain[i + 1];
    refined.push_back(a);
    long dx = b.first - a.first, dy = b.second - a.second;
    long g = std::gcd(std::abs(dx), std::abs(dy));
    for (long t = 1; t < g; ++t) {
      LatticePoint mid{a.first + t * dx / g, a.second + t * dy / g};
      if (S.contains(mid)) refined.push_back(mid);
    }
  }
  refined.push_back(chain.back());

  std::vector<std::pair<LatticePoint, LatticePoint>> segments;
  for (std::size_t i = 0; i + 1 < refined.size(); ++i)
    segments.push_back({refined[i], refined[i + 1]});
  return segments;
}

std::vector<HeckeQuad> boundary_segment_quads(const Sublattice& S) {
  std::vector<HeckeQuad> out;
  for (const auto& [P, Q] : boundary_segments(S))
    out.push_back({P.first, Q.first, P.second, Q.second});
  return out;
}

std::vector<HeckeQuad> hecke_quads_for(const Sublattice& S, long p) {
  std::vector<HeckeQuad> out;
  for (const HeckeQuad& h : enumerate_H(p)) {
    if (Sublattice::from_rows({h.a, h.c}, {h.b, h.d}) == S) out.push_back(h);
  }
  return out;
}

Sublattice dual_lattice(const Sublattice& S) {
  // Quarter turn (x, y) -> (-y, x) of the generator rows, re-reduced.
  return Sublattice::from_rows({-S.hnf_b(), S.hnf_a()}, {-S.hnf_d(), 0});
}

namespace {

// Interior (both coordinates positive) vertices of the boundary chain of S.
std::vector<LatticePoint> interior_chain_vertices(const Sublattice& S) {
  std::vector<LatticePoint> out;
  auto segments = boundary_segments(S);
  std::vector<LatticePoint> verts;
  for (const auto& [P, Q] : segments) {
    verts.push_back(P);
    verts.push_back(Q);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (const auto& v : verts)
    if (v.first > 0 && v.second > 0) out.push_back(v);
  return out;
}

}  // namespace

std::vector<LatticePoint> rays(const Sublattice& S) {
  std::set<LatticePoint> dirs{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& v : interior_chain_vertices(S)) {
    LatticePoint d = primitive(v);
    dirs.insert(d);
    dirs.insert({-d.first, -d.second});
  }
  // Second-quadrant chain via the x-reflection of S.
  Sublattice reflected =
      Sublattice::from_rows({-S.hnf_a(), S.hnf_b()}, {0, S.hnf_d()});
  for (const auto& v : interior_chain_vertices(reflected)) {
    LatticePoint d = primitive({-v.first, v.second});
    dirs.insert(d);
    dirs.insert({-d.first, -d.second});
  }
  std::vector<LatticePoint> out(dirs.begin(), dirs.end());
  std::sort(out.begin(), out.end(), ccw_less);
  return out;
}

Cone cone_of(const Sublattice& S, long x, long y) {
  if (x == 0 && y == 0) throw std::invalid_argument("cone of the zero vector");
  if (!S.contains(x, y)) throw std::invalid_argument("point is not in the sublattice");
  LatticePoint d = primitive({x, y});
  std::vector<LatticePoint> R = rays(S);
  for (const auto& r : R)
    if (r == d) return Cone{true, r, r};
  for (std::size_t i = 0; i < R.size(); ++i) {
    const LatticePoint& r1 = R[i];
    const LatticePoint& r2 = R[(i + 1) % R.size()];
    if (cross(r1, d) > 0 && cross(d, r2) > 0) return Cone{false, r1, r2};
  }
  throw std::logic_error("direction not bracketed by the fan rays");
}

CRegion::CRegion(const Sublattice& S, long base_x, long base_y)
    : base_x_(base_x), base_y_(base_y) {
  if (base_x == 0 && base_y == 0) throw std::invalid_argument("zero base point");
  if (base_x == 0 || base_y == 0)
    throw std::invalid_argument("axis-direction base points are not supported");
  if (!S.contains(base_x, base_y))
    throw std::invalid_argument("base point is not in the sublattice");
  LatticePoint base{base_x, base_y};
  std::vector<LatticePoint> R = rays(S);
  std::set<LatticePoint> edge_rays;
  for (std::size_t i = 0; i < R.size(); ++i) {
    const LatticePoint& r1 = R[i];
    const LatticePoint& r2 = R[(i + 1) % R.size()];
    // The closed cone meets the base's perpendicular line away from the
    // origin exactly when the base pairs with opposite (or zero) signs
    // against its two edges.
    if (sign_of(dot(r1, base)) * sign_of(dot(r2, base)) <= 0) {
      removed_.push_back({r1, r2});
      edge_rays.insert(r1);
      edge_rays.insert(r2);
    }
  }
  for (const auto& r : edge_rays)
    if (dot(r, base) > 0) boundary_rays_.push_back(r);
  std::sort(boundary_rays_.begin(), boundary_rays_.end(), ccw_less);
}

bool CRegion::contains(long x, long y) const {
  LatticePoint p{x, y};
  if (dot(p, {base_x_, base_y_}) <= 0) return false;
  for (const auto& [r1, r2] : removed_)
    if (cross(r1, p) >= 0 && cross(p, r2) >= 0) return false;
  return true;
}

bool CRegion::boundary_contains(long x, long y) const {
  if (x == 0 && y == 0) return false;
  LatticePoint d = primitive({x, y});
  return std::find(boundary_rays_.begin(), boundary_rays_.end(), d) !=
         boundary_rays_.end();
}

namespace {

bool in_open_quadrant_one(long x, long y) { return x > 0 && y > 0; }
bool in_open_quadrant_two(long x, long y) { return x < 0 && y > 0; }

// Signed multiplicity of the point pair (m, k) across the determinant-p
// matrices with column lattice S: transformed first-quadrant incidences
// minus transformed second-quadrant incidences, with the untransformed
// quadrant incidences subtracted the opposite way.
long signed_count(const std::vector<HeckeQuad>& quads, const SignedQuad& t) {
  long m1 = t.m1, m2 = t.m2, k1 = t.k1, k2 = t.k2;
  long n = 0;
  for (const HeckeQuad& h : quads) {
    long mt1 = h.d * m1 - h.b * m2;   // first transformed coordinate of m
    long mt2 = h.a * m2 - h.c * m1;   // second transformed coordinate of m
    long kt1 = h.a * k1 + h.c * k2;   // first transformed coordinate of k
    long kt2 = h.b * k1 + h.d * k2;   // second transformed coordinate of k
    if (mt1 > 0 && mt2 > 0 && kt1 > 0 && kt2 > 0) ++n;
    if (mt1 < 0 && mt2 > 0 && kt1 < 0 && kt2 > 0) --n;
  }
  if (in_open_quadrant_one(m1, m2) && in_open_quadrant_one(k1, k2)) --n;
  if (in_open_quadrant_two(m1, m2) && in_open_quadrant_two(k1, k2)) ++n;
  return n;
}

}  // namespace

Rational inside_cancellation_check(const Sublattice& S, long p, int l, int r_exp,
                                   int s_exp, long u, long v, const SignedQuad& t) {
  std::vector<HeckeQuad> quads = hecke_quads_for(S, p);
  ModLPoly2 weight = a_weight_function(l, u, v, p, r_exp, s_exp);
  long n_plus = signed_count(quads, t);
  long n_minus = signed_count(quads, t.negated());
  return Rational(n_plus) * weight.eval(t.k1, t.k2) +
         Rational(n_minus) * weight.eval(-t.k1, -t.k2);
}

std::vector<SignedQuad> admissible_quadruples(const Sublattice& S, long p, long D) {
  Sublattice dual = dual_lattice(S);
  std::vector<LatticePoint> ray_s = rays(S);
  std::vector<LatticePoint> ray_dual = rays(dual);
  auto on_rays = [](const std::vector<LatticePoint>& R, long x, long y) {
    if (x == 0 && y == 0) return true;
    LatticePoint d = primitive({x, y});
    return std::find(R.begin(), R.end(), d) != R.end();
  };

  std::set<SignedQuad> seen;
  auto admit = [&](long m1, long k1, long m2, long k2) {
    if (m1 * k1 + m2 * k2 != p * D) return;
    if (!S.contains(m1, m2) || !dual.contains(k1, k2)) return;
    if (on_rays(ray_s, m1, m2) || on_rays(ray_dual, k1, k2)) return;
    SignedQuad t{m1, k1, m2, k2};
    // One representative per sign pair.
    if (k2 < 0 || (k2 == 0 && k1 < 0)) t = t.negated();
    seen.insert(t);
  };

  // Images of positive quadruples under each determinant-p matrix with
  // column lattice S, in both quadrant orientations.
  for (const HeckeQuad& h : hecke_quads_for(S, p)) {
    for (const IQuad& q : enumerate_I(D)) {
      for (int flip = 0; flip < 2; ++flip) {
        long x1 = flip ? -q.m1 : q.m1;
        long x2 = q.m2;
        long y1 = flip ? -q.k1 : q.k1;
        long y2 = q.k2;
        long m1 = x1 * h.a + x2 * h.b;
        long m2 = x1 * h.c + x2 * h.d;
        long k1 = h.d * y1 - h.c * y2;
        long k2 = -h.b * y1 + h.a * y2;
        admit(m1, k1, m2, k2);
      }
    }
  }
  // Direct small solutions in matching open quadrants.
  long bound = p * D;
  for (long m1 = -bound; m1 <= bound; ++m1) {
    for (long m2 = 1; m2 <= bound; ++m2) {
      if (m1 == 0) continue;
      for (long k1 = -bound; k1 <= bound; ++k1) {
        if (k1 == 0 || sign_of(k1) != sign_of(m1)) continue;
        long rem = p * D - m1 * k1;
        if (rem <= 0 || rem % m2 != 0) continue;
        long k2 = rem / m2;
        admit(m1, k1, m2, k2);
      }
    }
  }
  return std::vector<SignedQuad>(seen.begin(), seen.end());
}

}  // namespace toric
