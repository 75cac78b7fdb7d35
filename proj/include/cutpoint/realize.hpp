#pragma once

// Points of the cut-point realization |X|. A point is a finite set of cuts in
// the open unit interval together with a nondegenerate simplex whose vertices
// are the components of the complement, listed left to right.

#include "cutpoint/rational.hpp"
#include "cutpoint/sset.hpp"

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace cutpoint {

class RealizationPoint {
public:
  /// Throws std::invalid_argument unless the data is already in normal form:
  /// cuts strictly increasing inside (0,1), simplex nondegenerate in `space`
  /// with dimension equal to the number of cuts.
  RealizationPoint(std::shared_ptr<const SimplicialSet> space, std::vector<Rational> cuts, SimplexRef simplex);

  const std::shared_ptr<const SimplicialSet>& space() const { return space_; }
  const std::vector<Rational>& cuts() const { return cuts_; }
  const SimplexRef& simplex() const { return simplex_; }

  friend bool operator==(const RealizationPoint& a, const RealizationPoint& b) {
    return a.space_ == b.space_ && a.cuts_ == b.cuts_ && a.simplex_ == b.simplex_;
  }

private:
  std::shared_ptr<const SimplicialSet> space_;
  std::vector<Rational> cuts_;
  SimplexRef simplex_;
};

/// Orientation preserving piecewise-linear homeomorphism of [0,1]. Interior
/// breakpoints on a straight segment are dropped so equal maps compare equal.
class PLHomeo {
public:
  using Breakpoint = std::pair<Rational, Rational>;

  explicit PLHomeo(std::vector<Breakpoint> breakpoints);
  static PLHomeo identity();

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  Rational operator()(const Rational& x) const;
  Rational inverse_at(const Rational& y) const;
  /// Slope of the segment containing x (right-hand slope; left slope at 1).
  Rational slope_at(const Rational& x) const;
  PLHomeo inverse() const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

private:
  std::vector<Breakpoint> points_;
};

/// phi o psi.
PLHomeo compose(const PLHomeo& phi, const PLHomeo& psi);

/// Finite measure on [0,1] with a piecewise-constant positive density.
class Measure {
public:
  /// breakpoints 0 = b_0 < ... < b_k = 1, density[i] > 0 on (b_i, b_{i+1}).
  Measure(std::vector<Rational> breakpoints, std::vector<Rational> density);
  static Measure lebesgue();

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Rational>& density() const { return density_; }
  Rational density_at(const Rational& x) const;
  /// Measure of the interval between a and b (a <= b).
  Rational measure(const Rational& a, const Rational& b) const;

private:
  std::vector<Rational> breaks_;
  std::vector<Rational> density_;
};

/// The image measure phi_* mu.
Measure pushforward(const PLHomeo& phi, const Measure& mu);

/// Brings (cuts, simplex) to normal form: endpoint cuts are dropped and each
/// degeneracy letter j deletes the j-th interior cut. Cuts may be given in
/// any order but must be distinct and lie in [0,1].
RealizationPoint normalize_point(std::shared_ptr<const SimplicialSet> space, std::vector<Rational> cuts,
                                 const NormalizedSimplex& simplex);

/// The simplex of p pulled back to the finer cut set `finer` (a superset of
/// p's cuts): components of the finer partition map to the coarser ones.
NormalizedSimplex refine(const RealizationPoint& p, const std::vector<Rational>& finer);

/// Coordinates 0 <= x_1 <= ... <= x_n <= 1 of a point of |Delta^n|, where
/// the associated step function takes value i on (x_i, x_{i+1}) with
/// x_0 = 0 and x_{n+1} = 1.
std::vector<Rational> to_coordinates(const RealizationPoint& p);
RealizationPoint from_coordinates(std::shared_ptr<const SimplicialSet> delta_n, const std::vector<Rational>& coords);

std::pair<RealizationPoint, RealizationPoint> split_product(const RealizationPoint& p);
RealizationPoint merge_product(std::shared_ptr<const SimplicialSet> product_space, const RealizationPoint& px,
                               const RealizationPoint& py);

RealizationPoint apply_homeo(const PLHomeo& phi, const RealizationPoint& p);

inline constexpr std::size_t default_component_cap = 20;

/// The metric d_mu: over the common refinement, the measure of the
/// complement of the heaviest set of components on which both points
/// restrict to the same simplex. Throws std::length_error when the common
/// refinement has more than `component_cap` components.
Rational distance(const Measure& mu, const RealizationPoint& u, const RealizationPoint& v,
                  std::size_t component_cap = default_component_cap);

/// Same as distance but evaluated over an explicit refinement `cuts`, which
/// must contain the cuts of both points.
Rational distance_over(const Measure& mu, const RealizationPoint& u, const RealizationPoint& v,
                       std::vector<Rational> cuts, std::size_t component_cap = default_component_cap);

}  // namespace cutpoint
