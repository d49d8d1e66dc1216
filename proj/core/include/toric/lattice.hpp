#pragma once

// Planar lattice geometry: the determinant-n matrix quadruples driving the
// Hecke action, the positive quadruple sets I(D) with their up/down moves and
// thread partition, finite-index sublattices of Z^2 in Hermite form, boundary
// chains of their first-quadrant hulls, lattice duality, fan rays and cones,
// half-plane regions attached to a base direction, and the signed cancellation
// sum that the Hecke-equivariance argument reduces to.

#include <toric/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// Integer matrix (a b; c d) with a > b >= 0, d > c >= 0, det = n.
struct HeckeQuad {
  long a, b, c, d;
  friend bool operator==(const HeckeQuad&, const HeckeQuad&) = default;
  friend auto operator<=>(const HeckeQuad&, const HeckeQuad&) = default;
};

// Positive quadruple with m1*k1 + m2*k2 = D.
struct IQuad {
  long m1, k1, m2, k2;
  friend bool operator==(const IQuad&, const IQuad&) = default;
  friend auto operator<=>(const IQuad&, const IQuad&) = default;
};

// Quadruple with entries of arbitrary sign, packing the point pair
// m = (m1, m2), k = (k1, k2).
struct SignedQuad {
  long m1, k1, m2, k2;
  SignedQuad negated() const { return {-m1, -k1, -m2, -k2}; }
  friend bool operator==(const SignedQuad&, const SignedQuad&) = default;
  friend auto operator<=>(const SignedQuad&, const SignedQuad&) = default;
};

// All quadruples of determinant n, in lexicographic order.
std::vector<HeckeQuad> enumerate_H(long n);

// All positive quadruples with m1*k1 + m2*k2 = D, in lexicographic order.
std::vector<IQuad> enumerate_I(long D);

// Up move: defined unless m1 == m2.
//   m1 > m2: (m2, k1+k2, m1-m2, k1);  m1 < m2: (m2-m1, k2, m1, k1+k2).
std::optional<IQuad> thread_up(const IQuad& t);

// Down move, inverse of the up move: defined unless k1 == k2.
//   k1 > k2: (m1+m2, k2, m1, k1-k2);  k1 < k2: (m2, k2-k1, m1+m2, k1).
std::optional<IQuad> thread_down(const IQuad& t);

// Partition of I(D) into maximal down-move chains; each chain starts at an
// element with m1 == m2 and ends at an element with k1 == k2.
std::vector<std::vector<IQuad>> threads(long D);

using LatticePoint = std::pair<long, long>;

// Finite-index sublattice of Z^2 with Hermite-form generator rows
// (a, b) and (0, d): a > 0, d > 0, 0 <= b < d.
class Sublattice {
 public:
  static Sublattice from_hnf(long a, long b, long d);
  // Hermite reduction of the lattice spanned by two independent rows.
  static Sublattice from_rows(LatticePoint r1, LatticePoint r2);

  long hnf_a() const { return a_; }
  long hnf_b() const { return b_; }
  long hnf_d() const { return d_; }
  long index() const { return a_ * d_; }

  bool contains(long x, long y) const;
  bool contains(const LatticePoint& p) const { return contains(p.first, p.second); }

  std::string to_string() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend auto operator<=>(const Sublattice&, const Sublattice&) = default;

 private:
  Sublattice(long a, long b, long d) : a_(a), b_(b), d_(d) {}
  long a_, b_, d_;
};

// The p + 1 sublattices of index p (p prime).
std::vector<Sublattice> sublattices_index_p(long p);

// Compact boundary chain of the hull of the nonzero first-quadrant points of
// S, subdivided at lattice points of S lying on its edges, as consecutive
// vertex pairs ordered from the x-axis to the y-axis.
std::vector<std::pair<LatticePoint, LatticePoint>> boundary_segments(const Sublattice& S);

// Each boundary segment ((a,c),(b,d)) re-read as the quadruple (a,b,c,d).
std::vector<HeckeQuad> boundary_segment_quads(const Sublattice& S);

// The quadruples h of determinant p whose column lattice Z(a,c) + Z(b,d)
// equals S.
std::vector<HeckeQuad> hecke_quads_for(const Sublattice& S, long p);

// Dual of an index-p sublattice with respect to the pairing x.y mod p:
// {P : P.s in pZ for all s in S}; equals the quarter-turn image of S.
Sublattice dual_lattice(const Sublattice& S);

// Primitive ray directions of the fan attached to S, in counterclockwise
// order starting at (1, 0): the four axis directions together with the
// directions of the interior vertices of the boundary chains in all four
// quadrants.
std::vector<LatticePoint> rays(const Sublattice& S);

// Cone of the fan containing a nonzero point of S: either a single ray or the
// open cone between two counterclockwise-consecutive rays.
struct Cone {
  bool is_ray;
  LatticePoint ray1;  // the ray itself, or the clockwise edge of the open cone
  LatticePoint ray2;  // equal to ray1 for a ray, else the counterclockwise edge
  friend bool operator==(const Cone&, const Cone&) = default;
};

Cone cone_of(const Sublattice& S, long x, long y);

// Open region attached to a non-axis base point of S: the open half-plane of
// positive scalar product with the base, minus the closed fan cones whose
// closure meets the base's perpendicular line away from the origin.
class CRegion {
 public:
  CRegion(const Sublattice& S, long base_x, long base_y);

  bool contains(long x, long y) const;
  // True when (x, y) lies on one of the removed-cone edge rays that have
  // positive scalar product with the base.
  bool boundary_contains(long x, long y) const;

  const std::vector<LatticePoint>& boundary_rays() const { return boundary_rays_; }

 private:
  long base_x_, base_y_;
  std::vector<std::pair<LatticePoint, LatticePoint>> removed_;  // closed cones
  std::vector<LatticePoint> boundary_rays_;
};

// Signed count of the quadruple t across the determinant-p matrices whose
// column lattice is S, weighted by the two-variable residue weight attached
// to (l, u, v, p, r, s), plus the same count for -t; zero whenever the point
// pair of t avoids the fan rays of S and of its dual.
Rational inside_cancellation_check(const Sublattice& S, long p, int l, int r_exp,
                                   int s_exp, long u, long v, const SignedQuad& t);

// Sweep domain for the cancellation check at determinant p and level pD:
// quadruples t with m in S, k in the dual, m.k = pD, both points off the
// respective fan rays; one representative per {t, -t} pair (k2 > 0, then
// k1 > 0 on ties).
std::vector<SignedQuad> admissible_quadruples(const Sublattice& S, long p, long D);

}  // namespace toric
