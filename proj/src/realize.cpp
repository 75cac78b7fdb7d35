#include "cutpoint/realize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cutpoint {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool in_unit(const Rational& x) { return x >= Rational(0) && x <= Rational(1); }

// Index i of the segment [p_i, p_{i+1}] containing x, preferring the one
// starting at x.
template <class Getter>
std::size_t segment_of(std::size_t count, const Rational& x, Getter at) {
  std::size_t i = 0;
  while (i + 2 < count && at(i + 1) <= x) ++i;
  return i;
}

}  // namespace

RealizationPoint::RealizationPoint(std::shared_ptr<const SimplicialSet> space, std::vector<Rational> cuts,
                                   SimplexRef simplex)
    : space_(std::move(space)), cuts_(std::move(cuts)), simplex_(simplex) {
  require(space_ != nullptr, "point needs a space");
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    require(cuts_[i] > Rational(0) && cuts_[i] < Rational(1), "cut " + cuts_[i].str() + " not inside (0,1)");
    if (i > 0) require(cuts_[i - 1] < cuts_[i], "cuts must be strictly increasing");
  }
  require(simplex_.dim == static_cast<int>(cuts_.size()),
          "simplex dimension " + std::to_string(simplex_.dim) + " does not match " + std::to_string(cuts_.size()) +
              " cuts");
  require(space_->contains(simplex_), "simplex [" + std::to_string(simplex_.dim) + "," +
                                          std::to_string(simplex_.index) + "] not in space");
}

PLHomeo::PLHomeo(std::vector<Breakpoint> breakpoints) {
  require(breakpoints.size() >= 2, "PL homeomorphism needs at least two breakpoints");
  require(breakpoints.front() == Breakpoint{Rational(0), Rational(0)}, "first breakpoint must be (0,0)");
  require(breakpoints.back() == Breakpoint{Rational(1), Rational(1)}, "last breakpoint must be (1,1)");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    require(breakpoints[i - 1].first < breakpoints[i].first, "breakpoint x values must be strictly increasing");
    require(breakpoints[i - 1].second < breakpoints[i].second, "breakpoint y values must be strictly increasing");
  }
  for (const auto& bp : breakpoints) {
    if (points_.size() >= 2) {
      const auto& a = points_[points_.size() - 2];
      const auto& b = points_.back();
      if ((b.second - a.second) * (bp.first - b.first) == (bp.second - b.second) * (b.first - a.first))
        points_.pop_back();
    }
    points_.push_back(bp);
  }
}

PLHomeo PLHomeo::identity() { return PLHomeo({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}); }

Rational PLHomeo::operator()(const Rational& x) const {
  require(in_unit(x), "homeomorphism evaluated outside [0,1]");
  const auto i = segment_of(points_.size(), x, [&](std::size_t k) { return points_[k].first; });
  const auto& [x0, y0] = points_[i];
  const auto& [x1, y1] = points_[i + 1];
  return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

Rational PLHomeo::inverse_at(const Rational& y) const {
  require(in_unit(y), "inverse evaluated outside [0,1]");
  const auto i = segment_of(points_.size(), y, [&](std::size_t k) { return points_[k].second; });
  const auto& [x0, y0] = points_[i];
  const auto& [x1, y1] = points_[i + 1];
  return x0 + (y - y0) * (x1 - x0) / (y1 - y0);
}

Rational PLHomeo::slope_at(const Rational& x) const {
  require(in_unit(x), "slope evaluated outside [0,1]");
  const auto i = segment_of(points_.size(), x, [&](std::size_t k) { return points_[k].first; });
  return (points_[i + 1].second - points_[i].second) / (points_[i + 1].first - points_[i].first);
}

PLHomeo PLHomeo::inverse() const {
  std::vector<Breakpoint> inv;
  for (const auto& [x, y] : points_) inv.emplace_back(y, x);
  return PLHomeo(std::move(inv));
}

PLHomeo compose(const PLHomeo& phi, const PLHomeo& psi) {
  std::vector<Rational> xs;
  for (const auto& bp : psi.breakpoints()) xs.push_back(bp.first);
  for (const auto& bp : phi.breakpoints()) xs.push_back(psi.inverse_at(bp.first));
  std::vector<PLHomeo::Breakpoint> out;
  for (const auto& x : sorted_unique(std::move(xs))) out.emplace_back(x, phi(psi(x)));
  return PLHomeo(std::move(out));
}

Measure::Measure(std::vector<Rational> breakpoints, std::vector<Rational> density)
    : breaks_(std::move(breakpoints)), density_(std::move(density)) {
  require(breaks_.size() >= 2 && breaks_.front() == Rational(0) && breaks_.back() == Rational(1),
          "measure breakpoints must run from 0 to 1");
  require(density_.size() + 1 == breaks_.size(), "measure needs one density value per piece");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    require(breaks_[i - 1] < breaks_[i], "measure breakpoints must be strictly increasing");
  for (const auto& d : density_) require(d.sign() > 0, "density values must be positive");
}

Measure Measure::lebesgue() { return Measure({Rational(0), Rational(1)}, {Rational(1)}); }

Rational Measure::density_at(const Rational& x) const {
  require(in_unit(x), "density evaluated outside [0,1]");
  return density_[segment_of(breaks_.size(), x, [&](std::size_t k) { return breaks_[k]; })];
}

Rational Measure::measure(const Rational& a, const Rational& b) const {
  require(in_unit(a) && in_unit(b) && a <= b, "measure of an invalid interval");
  Rational total(0);
  for (std::size_t i = 0; i < density_.size(); ++i) {
    const Rational lo = max(a, breaks_[i]);
    const Rational hi = min(b, breaks_[i + 1]);
    if (lo < hi) total += (hi - lo) * density_[i];
  }
  return total;
}

Measure pushforward(const PLHomeo& phi, const Measure& mu) {
  std::vector<Rational> ys;
  for (const auto& b : mu.breakpoints()) ys.push_back(phi(b));
  for (const auto& bp : phi.breakpoints()) ys.push_back(bp.second);
  ys = sorted_unique(std::move(ys));
  std::vector<Rational> breaks{ys.front()};
  std::vector<Rational> density;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const Rational x = phi.inverse_at((ys[i] + ys[i + 1]) / Rational(2));
    const Rational d = mu.density_at(x) / phi.slope_at(x);
    if (!density.empty() && density.back() == d) {
      breaks.back() = ys[i + 1];
    } else {
      density.push_back(d);
      breaks.push_back(ys[i + 1]);
    }
  }
  return Measure(std::move(breaks), std::move(density));
}

RealizationPoint normalize_point(std::shared_ptr<const SimplicialSet> space, std::vector<Rational> cuts,
                                 const NormalizedSimplex& simplex) {
  require(space != nullptr, "point needs a space");
  for (const auto& c : cuts) require(in_unit(c), "cut " + c.str() + " outside [0,1]");
  std::sort(cuts.begin(), cuts.end());
  require(std::adjacent_find(cuts.begin(), cuts.end()) == cuts.end(), "cuts must be distinct");
  std::erase_if(cuts, [](const Rational& c) { return c == Rational(0) || c == Rational(1); });
  require(simplex.dim() == static_cast<int>(cuts.size()),
          "simplex of dimension " + std::to_string(simplex.dim()) + " cannot label " +
              std::to_string(cuts.size() + 1) + " components");
  std::vector<Rational> kept;
  const auto& word = simplex.word();
  for (std::size_t j = 0; j < cuts.size(); ++j)
    if (!std::binary_search(word.begin(), word.end(), static_cast<int>(j))) kept.push_back(cuts[j]);
  return RealizationPoint(std::move(space), std::move(kept), simplex.base());
}

NormalizedSimplex refine(const RealizationPoint& p, const std::vector<Rational>& finer) {
  std::vector<int> r{0};
  for (const auto& c : finer) require(c > Rational(0) && c < Rational(1), "refinement cut outside (0,1)");
  for (std::size_t j = 0; j < finer.size(); ++j) {
    if (j > 0) require(finer[j - 1] < finer[j], "refinement cuts must be strictly increasing");
    const auto below = std::upper_bound(p.cuts().begin(), p.cuts().end(), finer[j]) - p.cuts().begin();
    r.push_back(static_cast<int>(below));
  }
  for (const auto& c : p.cuts())
    require(std::binary_search(finer.begin(), finer.end(), c), "refinement misses cut " + c.str());
  return act(*p.space(), NormalizedSimplex(p.simplex()),
             MonotoneMap(static_cast<int>(finer.size()), p.simplex().dim, std::move(r)));
}

std::vector<Rational> to_coordinates(const RealizationPoint& p) {
  const auto n = representable_dimension(*p.space());
  require(n.has_value(), "coordinates need a representable space Delta^n");
  const auto verts = standard_simplex_vertices(*n, p.simplex());
  std::vector<Rational> x;
  for (int i = 1; i <= *n; ++i) {
    Rational xi(1);
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (verts[j] >= i) {
        xi = j == 0 ? Rational(0) : p.cuts()[j - 1];
        break;
      }
    x.push_back(xi);
  }
  return x;
}

RealizationPoint from_coordinates(std::shared_ptr<const SimplicialSet> delta_n, const std::vector<Rational>& coords) {
  const auto n = representable_dimension(*delta_n);
  require(n.has_value(), "coordinates need a representable space Delta^n");
  require(static_cast<int>(coords.size()) == *n, "Delta^" + std::to_string(*n) + " needs " + std::to_string(*n) +
                                                     " coordinates, got " + std::to_string(coords.size()));
  std::vector<Rational> x{Rational(0)};
  for (std::size_t i = 0; i < coords.size(); ++i) {
    require(in_unit(coords[i]), "coordinate " + coords[i].str() + " outside [0,1]");
    require(coords[i] >= x.back(), "coordinates must be nondecreasing");
    x.push_back(coords[i]);
  }
  x.emplace_back(1);
  std::vector<int> attained;
  for (int i = 0; i <= *n; ++i)
    if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i) + 1]) attained.push_back(i);
  std::vector<Rational> cuts;
  for (const auto& c : coords)
    if (c > Rational(0) && c < Rational(1)) cuts.push_back(c);
  cuts = sorted_unique(std::move(cuts));
  return RealizationPoint(delta_n, std::move(cuts), standard_simplex_ref(*n, attained));
}

std::pair<RealizationPoint, RealizationPoint> split_product(const RealizationPoint& p) {
  const ProductStructure* info = p.space()->product();
  require(info != nullptr, "split_product needs a point of a product space");
  const auto& [a, b] =
      info->pairs.at(static_cast<std::size_t>(p.simplex().dim)).at(static_cast<std::size_t>(p.simplex().index));
  return {normalize_point(info->left, p.cuts(), a), normalize_point(info->right, p.cuts(), b)};
}

RealizationPoint merge_product(std::shared_ptr<const SimplicialSet> product_space, const RealizationPoint& px,
                               const RealizationPoint& py) {
  const ProductStructure* info = product_space->product();
  require(info != nullptr, "merge_product needs a product space");
  require(px.space() == info->left && py.space() == info->right, "points do not belong to the product's factors");
  std::vector<Rational> cuts = px.cuts();
  cuts.insert(cuts.end(), py.cuts().begin(), py.cuts().end());
  cuts = sorted_unique(std::move(cuts));
  const auto it = info->lookup.find({refine(px, cuts), refine(py, cuts)});
  if (it == info->lookup.end()) throw std::logic_error("refined pair is not a simplex of the product");
  return RealizationPoint(std::move(product_space), std::move(cuts), it->second);
}

RealizationPoint apply_homeo(const PLHomeo& phi, const RealizationPoint& p) {
  std::vector<Rational> cuts;
  for (const auto& c : p.cuts()) cuts.push_back(phi(c));
  return RealizationPoint(p.space(), std::move(cuts), p.simplex());
}

Rational distance_over(const Measure& mu, const RealizationPoint& u, const RealizationPoint& v,
                       std::vector<Rational> cuts, std::size_t component_cap) {
  require(u.space() == v.space(), "distance between points of different spaces");
  cuts = sorted_unique(std::move(cuts));
  const std::size_t n = cuts.size() + 1;
  if (n > component_cap)
    throw std::length_error("distance: " + std::to_string(n) + " components exceed the brute-force limit of " +
                            std::to_string(component_cap));
  const auto ru = refine(u, cuts);
  const auto rv = refine(v, cuts);

  std::vector<Rational> weight;
  for (std::size_t j = 0; j < n; ++j)
    weight.push_back(mu.measure(j == 0 ? Rational(0) : cuts[j - 1], j + 1 == n ? Rational(1) : cuts[j]));
  Rational total(0);
  for (const auto& w : weight) total += w;

  // The empty family always agrees.
  Rational best(0);
  const int top = static_cast<int>(n) - 1;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Rational mass(0);
    std::vector<int> members;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1UL) {
        mass += weight[j];
        members.push_back(static_cast<int>(j));
      }
    if (mass <= best) continue;
    const MonotoneMap inclusion(top, members);
    if (act(*u.space(), ru, inclusion) == act(*u.space(), rv, inclusion)) best = mass;
  }
  return total - best;
}

Rational distance(const Measure& mu, const RealizationPoint& u, const RealizationPoint& v, std::size_t component_cap) {
  std::vector<Rational> cuts = u.cuts();
  cuts.insert(cuts.end(), v.cuts().begin(), v.cuts().end());
  return distance_over(mu, u, v, std::move(cuts), component_cap);
}

}  // namespace cutpoint
