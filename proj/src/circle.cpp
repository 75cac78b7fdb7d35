#include "cutpoint/circle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cutpoint {

namespace {

void check_circle_cuts(const std::vector<Rational>& cuts) {
  if (cuts.empty()) throw std::invalid_argument("a point of the circle realization needs at least one cut");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] < Rational(0) || cuts[i] >= Rational(1))
      throw std::invalid_argument("cuts[" + std::to_string(i) + "] = " + cuts[i].str() + " is outside [0,1)");
    if (i > 0 && !(cuts[i - 1] < cuts[i]))
      throw std::invalid_argument("cuts[" + std::to_string(i) + "] is not larger than the previous cut");
  }
}

// Drops interior breakpoints lying on the segment through their neighbours.
std::vector<CirclePLHomeo::Breakpoint> drop_collinear(std::vector<CirclePLHomeo::Breakpoint> p) {
  std::vector<CirclePLHomeo::Breakpoint> out;
  for (const auto& b : p) {
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& m = out.back();
      if ((m.second - a.second) * (b.first - m.first) != (b.second - m.second) * (m.first - a.first)) break;
      out.pop_back();
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace

CyclicPoint::CyclicPoint(Unchecked, std::shared_ptr<const CyclicSet> space, std::vector<Rational> cuts,
                         SimplexRef simplex)
    : space_(std::move(space)), cuts_(std::move(cuts)), simplex_(simplex) {}

CyclicPoint::CyclicPoint(std::shared_ptr<const CyclicSet> space, std::vector<Rational> cuts, SimplexRef simplex)
    : space_(std::move(space)), cuts_(std::move(cuts)), simplex_(simplex) {
  if (!space_) throw std::invalid_argument("point needs a space");
  check_circle_cuts(cuts_);
  if (simplex_.dim != static_cast<int>(cuts_.size()) - 1)
    throw std::invalid_argument("simplex dimension must be one less than the number of cuts");
  if (!space_->base()->contains(simplex_)) throw std::invalid_argument("simplex not in space");
  const auto normal = normalize_cyclic_point(space_, cuts_, NormalizedSimplex(simplex_));
  if (!(normal == *this)) throw std::invalid_argument("point is not in normal form");
}

CyclicPoint normalize_cyclic_point(std::shared_ptr<const CyclicSet> space, std::vector<Rational> cuts,
                                   const NormalizedSimplex& simplex, long offset) {
  if (!space) throw std::invalid_argument("point needs a space");
  check_circle_cuts(cuts);
  if (simplex.dim() != static_cast<int>(cuts.size()) - 1)
    throw std::invalid_argument("simplex dimension must be one less than the number of cuts");
  const SimplicialSet& base = *space->base();
  if (!base.contains(simplex.base())) throw std::invalid_argument("simplex not in space");

  NormalizedSimplex x = space->tau_power(simplex, offset);
  while (true) {
    // Letter j merges arcs j and j+1 across cut j+1.
    const auto& word = x.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) cuts.erase(cuts.begin() + (*it + 1));
    x = NormalizedSimplex(x.base());
    const int k = static_cast<int>(cuts.size()) - 1;
    if (k == 0) break;

    // Relabel so arc 1 is object 0; cut 0 then sits between objects k-1 and k.
    const NormalizedSimplex y = space->tau_power(x, -1);
    if (y.nondegenerate()) break;
    std::vector<int> gone;
    for (int j : y.word()) gone.push_back((j + 2) % (k + 1));
    if (std::find(gone.begin(), gone.end(), 0) == gone.end())
      throw std::logic_error("cyclic operator is inconsistent with the degeneracies");
    std::sort(gone.begin(), gone.end());
    for (auto it = gone.rbegin(); it != gone.rend(); ++it) cuts.erase(cuts.begin() + *it);
    x = NormalizedSimplex(y.base());
  }

  if (cuts.size() == 1 && space->dim_bound() >= 1) {
    const auto s0 = degeneracy(base, x, 0);
    if (space->tau(s0) == s0) cuts = {Rational(0)};
  }
  return CyclicPoint(CyclicPoint::Unchecked{}, std::move(space), std::move(cuts), x.base());
}

CyclicConfiguration insert_cut(const CyclicPoint& p, const Rational& cut) {
  const auto& cuts = p.cuts();
  if (cut < Rational(0) || cut >= Rational(1)) throw std::invalid_argument("cut outside [0,1)");
  if (std::find(cuts.begin(), cuts.end(), cut) != cuts.end()) throw std::invalid_argument("cut already present");
  const SimplicialSet& base = *p.space()->base();
  const NormalizedSimplex x(p.simplex());
  const int k = static_cast<int>(cuts.size()) - 1;

  CyclicConfiguration out{cuts, x};
  if (cut < cuts.front()) {
    // The new arc 0 and the last arc both lie in the old wrapping arc.
    out.cuts.insert(out.cuts.begin(), cut);
    out.simplex = p.space()->tau(degeneracy(base, x, k));
    return out;
  }
  const auto at = std::upper_bound(cuts.begin(), cuts.end(), cut) - cuts.begin();
  out.cuts.insert(out.cuts.begin() + at, cut);
  out.simplex = degeneracy(base, x, static_cast<int>(at) - 1);
  return out;
}

CirclePLHomeo::CirclePLHomeo(std::vector<Breakpoint> lift) {
  if (lift.size() < 2) throw std::invalid_argument("lift needs at least two breakpoints");
  if (lift.front().first != Rational(0) || lift.back().first != Rational(1))
    throw std::invalid_argument("lift must be given on [0,1]");
  if (lift.back().second != lift.front().second + Rational(1))
    throw std::invalid_argument("lift must satisfy phi(1) = phi(0) + 1");
  for (std::size_t i = 1; i < lift.size(); ++i)
    if (!(lift[i - 1].first < lift[i].first) || !(lift[i - 1].second < lift[i].second))
      throw std::invalid_argument("breakpoints[" + std::to_string(i) + "] is not strictly increasing");
  const Rational shift(lift.front().second.floor());
  for (auto& b : lift) b.second -= shift;
  points_ = drop_collinear(std::move(lift));
}

CirclePLHomeo CirclePLHomeo::identity() { return CirclePLHomeo({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}); }

CirclePLHomeo CirclePLHomeo::rotation(const Rational& theta) {
  return CirclePLHomeo({{Rational(0), theta}, {Rational(1), theta + Rational(1)}});
}

Rational CirclePLHomeo::operator()(const Rational& x) const {
  const Rational t(x.floor());
  const Rational u = x - t;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& [x0, y0] = points_[i - 1];
    const auto& [x1, y1] = points_[i];
    if (u <= x1) return y0 + (u - x0) * (y1 - y0) / (x1 - x0) + t;
  }
  throw std::logic_error("lift does not cover [0,1]");
}

Rational CirclePLHomeo::inverse_at(const Rational& y) const {
  const Rational s((y - points_.front().second).floor());
  const Rational v = y - s;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const auto& [x0, y0] = points_[i - 1];
    const auto& [x1, y1] = points_[i];
    if (v <= y1) return x0 + (v - y0) * (x1 - x0) / (y1 - y0) + s;
  }
  throw std::logic_error("lift does not cover a period");
}

CirclePLHomeo CirclePLHomeo::inverse() const {
  std::set<Rational> xs{Rational(0), Rational(1)};
  for (const auto& b : points_) xs.insert(b.second.frac());
  std::vector<Breakpoint> lift;
  for (const auto& v : xs) lift.emplace_back(v, inverse_at(v));
  return CirclePLHomeo(std::move(lift));
}

CirclePLHomeo compose(const CirclePLHomeo& phi, const CirclePLHomeo& psi) {
  std::set<Rational> xs;
  for (const auto& b : psi.lift()) xs.insert(b.first);
  const Rational lo = psi(Rational(0));
  const Rational hi = psi(Rational(1));
  for (long t = lo.floor() - 1; t <= hi.floor() + 1; ++t)
    for (const auto& b : phi.lift()) {
      const Rational y = b.first + Rational(t);
      if (lo <= y && y <= hi) xs.insert(psi.inverse_at(y));
    }
  std::vector<CirclePLHomeo::Breakpoint> lift;
  for (const auto& x : xs) lift.emplace_back(x, phi(psi(x)));
  return CirclePLHomeo(std::move(lift));
}

CyclicPoint apply_circle_homeo(const CirclePLHomeo& phi, const CyclicPoint& p) {
  std::vector<Rational> images;
  for (const auto& c : p.cuts()) images.push_back(phi(c).frac());
  const auto r = std::min_element(images.begin(), images.end()) - images.begin();
  std::rotate(images.begin(), images.begin() + r, images.end());
  return normalize_cyclic_point(p.space(), std::move(images), NormalizedSimplex(p.simplex()), -static_cast<long>(r));
}

std::vector<Rational> cyc_coordinates(const CyclicRepresentable& rep, const CyclicPoint& p) {
  if (p.space() != rep.set) throw std::invalid_argument("point does not live on the representable cyclic set");
  const auto& psi = rep.nondegenerate.at(static_cast<std::size_t>(p.simplex().dim))
                        .at(static_cast<std::size_t>(p.simplex().index));
  const long period = static_cast<long>(p.cuts().size());
  auto lifted_cut = [&](long b) {
    const long q = b >= 0 ? b / period : -((-b + period - 1) / period);
    return p.cuts()[static_cast<std::size_t>(b - q * period)] + Rational(q);
  };

  // x_j is the start of the first arc whose object reaches j.
  std::vector<Rational> x;
  for (long j = 0; j <= rep.n; ++j) {
    long b = -period;
    while (psi(b) < j) ++b;
    x.push_back(lifted_cut(b));
  }
  const Rational shift(x.front().floor());
  for (auto& v : x) v -= shift;
  return x;
}

CyclicPoint from_cyc_coordinates(const CyclicRepresentable& rep, const std::vector<Rational>& coords) {
  const long n = rep.n;
  if (static_cast<long>(coords.size()) != n + 1)
    throw std::invalid_argument("expected " + std::to_string(n + 1) + " coordinates");
  if (coords.front() < Rational(0) || coords.front() >= Rational(1))
    throw std::invalid_argument("coords[0] must lie in [0,1)");
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (coords[i] < coords[i - 1]) throw std::invalid_argument("coords[" + std::to_string(i) + "] decreases");
  if (coords.back() > coords.front() + Rational(1))
    throw std::invalid_argument("coords[" + std::to_string(n) + "] exceeds coords[0] + 1");

  auto lifted = [&](long j) {
    const long q = j >= 0 ? j / (n + 1) : -((-j + n) / (n + 1));
    return coords[static_cast<std::size_t>(j - q * (n + 1))] + Rational(q);
  };
  std::set<Rational> distinct;
  for (const auto& c : coords) distinct.insert(c.frac());
  std::vector<Rational> cuts(distinct.begin(), distinct.end());

  // Object of the arc containing y: the last j whose step lies before y.
  auto object_at = [&](const Rational& y) {
    long j = 2 * (n + 1);
    while (!(lifted(j) < y)) --j;
    return static_cast<int>(j);
  };
  std::vector<int> values;
  for (std::size_t a = 0; a < cuts.size(); ++a) {
    const Rational next = a + 1 < cuts.size() ? cuts[a + 1] : cuts.front() + Rational(1);
    values.push_back(object_at((cuts[a] + next) / Rational(2)));
  }
  const CycMorphism psi(static_cast<int>(cuts.size()) - 1, static_cast<int>(n), std::move(values));
  return normalize_cyclic_point(rep.set, std::move(cuts), rep.encode(psi));
}

RealizationPoint cut_at_basepoint(const CyclicPoint& p) {
  CyclicConfiguration c{p.cuts(), NormalizedSimplex(p.simplex())};
  if (p.cuts().front() != Rational(0)) c = insert_cut(p, Rational(0));
  std::vector<Rational> interior(c.cuts.begin() + 1, c.cuts.end());
  return normalize_point(p.space()->base(), std::move(interior), c.simplex);
}

CyclicPoint join_at_basepoint(std::shared_ptr<const CyclicSet> space, const RealizationPoint& q) {
  if (!space || q.space() != space->base())
    throw std::invalid_argument("point does not live on the underlying simplicial set");
  std::vector<Rational> cuts{Rational(0)};
  cuts.insert(cuts.end(), q.cuts().begin(), q.cuts().end());
  return normalize_cyclic_point(std::move(space), std::move(cuts), NormalizedSimplex(q.simplex()));
}

}  // namespace cutpoint
