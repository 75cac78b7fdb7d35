#pragma once

// Points of the realization of a cyclic set over the circle R/Z: a nonempty
// finite set of cuts in [0,1) together with a simplex whose vertices are the
// arcs of the complement. Arc i begins at the i-th smallest cut; the arc that
// begins at the largest cut wraps through 0.

#include "cutpoint/cyclic.hpp"
#include "cutpoint/rational.hpp"
#include "cutpoint/realize.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace cutpoint {

class CyclicPoint {
public:
  /// Throws std::invalid_argument unless the data is already in normal form:
  /// cuts strictly increasing in [0,1), simplex nondegenerate of dimension
  /// |cuts| - 1, no cut removable by a cyclic degeneracy, and a lone cut at
  /// 0 whenever its vertex is fixed by t.
  CyclicPoint(std::shared_ptr<const CyclicSet> space, std::vector<Rational> cuts, SimplexRef simplex);

  const std::shared_ptr<const CyclicSet>& space() const { return space_; }
  const std::vector<Rational>& cuts() const { return cuts_; }
  const SimplexRef& simplex() const { return simplex_; }

  friend bool operator==(const CyclicPoint& a, const CyclicPoint& b) {
    return a.space_ == b.space_ && a.cuts_ == b.cuts_ && a.simplex_ == b.simplex_;
  }

private:
  struct Unchecked {};
  CyclicPoint(Unchecked, std::shared_ptr<const CyclicSet> space, std::vector<Rational> cuts, SimplexRef simplex);
  friend CyclicPoint normalize_cyclic_point(std::shared_ptr<const CyclicSet>, std::vector<Rational>,
                                            const NormalizedSimplex&, long);

  std::shared_ptr<const CyclicSet> space_;
  std::vector<Rational> cuts_;
  SimplexRef simplex_;
};

/// Normal form of (cuts, simplex) where object j of the simplex is the arc
/// beginning at the ((j + offset) mod |cuts|)-th smallest cut. Cuts must be
/// strictly increasing in [0,1); the space must be a valid cyclic set.
CyclicPoint normalize_cyclic_point(std::shared_ptr<const CyclicSet> space, std::vector<Rational> cuts,
                                   const NormalizedSimplex& simplex, long offset = 0);

/// The same point written over cuts plus one more, as unnormalized data in
/// canonical indexing (offset 0).
struct CyclicConfiguration {
  std::vector<Rational> cuts;
  NormalizedSimplex simplex;
};
CyclicConfiguration insert_cut(const CyclicPoint& p, const Rational& cut);

/// Degree-one orientation preserving PL homeomorphism of R/Z, given by its
/// lift on one period: breakpoints (0, y_0), ..., (1, y_0 + 1) with both
/// coordinates strictly increasing. The lift is normalized to y_0 in [0,1)
/// and collinear interior breakpoints are dropped.
class CirclePLHomeo {
public:
  using Breakpoint = std::pair<Rational, Rational>;

  explicit CirclePLHomeo(std::vector<Breakpoint> lift);
  static CirclePLHomeo identity();
  static CirclePLHomeo rotation(const Rational& theta);

  const std::vector<Breakpoint>& lift() const { return points_; }
  /// The lift at any real x; phi(x + 1) = phi(x) + 1.
  Rational operator()(const Rational& x) const;
  Rational inverse_at(const Rational& y) const;
  CirclePLHomeo inverse() const;

  friend bool operator==(const CirclePLHomeo&, const CirclePLHomeo&) = default;

private:
  std::vector<Breakpoint> points_;
};

/// phi o psi.
CirclePLHomeo compose(const CirclePLHomeo& phi, const CirclePLHomeo& psi);

CyclicPoint apply_circle_homeo(const CirclePLHomeo& phi, const CyclicPoint& p);

/// Lifted coordinates (x_0, ..., x_n) of a point of the representable cyclic
/// set: x_0 in [0,1), x_0 <= ... <= x_n <= x_0 + 1, and x_j is where the
/// associated functor steps from object j-1 to object j.
std::vector<Rational> cyc_coordinates(const CyclicRepresentable& rep, const CyclicPoint& p);
CyclicPoint from_cyc_coordinates(const CyclicRepresentable& rep, const std::vector<Rational>& coords);

/// Adds a cut at 0 when absent and reads the arcs as the components of the
/// interval, giving a point of the realization of the underlying simplicial
/// set.
RealizationPoint cut_at_basepoint(const CyclicPoint& p);
/// Inverse of cut_at_basepoint; q must live on space->base().
CyclicPoint join_at_basepoint(std::shared_ptr<const CyclicSet> space, const RealizationPoint& q);

}  // namespace cutpoint
