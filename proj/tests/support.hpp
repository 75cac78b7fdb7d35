#pragma once

#include "cutpoint/realize.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace testing_support {

using cutpoint::Rational;

inline std::mt19937& rng() {
  static std::mt19937 gen(20261014);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Rational strictly inside (0,1) with denominator at most max_den.
inline Rational interior_rational(int max_den = 24) {
  const int q = uniform(2, max_den);
  return Rational(uniform(1, q - 1), q);
}

inline std::vector<Rational> distinct_cuts(int k, int max_den = 24) {
  std::set<Rational> s;
  while (static_cast<int>(s.size()) < k) s.insert(interior_rational(max_den));
  return {s.begin(), s.end()};
}

inline cutpoint::RealizationPoint random_point(const std::shared_ptr<const cutpoint::SimplicialSet>& x,
                                               int max_den = 24) {
  std::vector<int> dims;
  for (int d = 0; d <= x->top_dimension(); ++d)
    if (x->count_nondegenerate(d) > 0) dims.push_back(d);
  const int d = dims[static_cast<std::size_t>(uniform(0, static_cast<int>(dims.size()) - 1))];
  const int k = uniform(0, x->count_nondegenerate(d) - 1);
  return cutpoint::RealizationPoint(x, distinct_cuts(d, max_den), {d, k});
}

/// Random PL homeomorphism with up to `pieces` linear pieces.
inline cutpoint::PLHomeo random_homeo(int pieces = 3) {
  const int k = uniform(0, pieces - 1);
  const auto xs = distinct_cuts(k, 12);
  const auto ys = distinct_cuts(k, 12);
  std::vector<cutpoint::PLHomeo::Breakpoint> bp{{Rational(0), Rational(0)}};
  for (int i = 0; i < k; ++i) bp.emplace_back(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
  bp.emplace_back(Rational(1), Rational(1));
  return cutpoint::PLHomeo(std::move(bp));
}

inline cutpoint::Measure random_measure() {
  const int k = uniform(0, 3);
  std::vector<Rational> b{Rational(0)};
  for (const auto& c : distinct_cuts(k, 10)) b.push_back(c);
  b.emplace_back(1);
  std::vector<Rational> d;
  for (int i = 0; i <= k; ++i) d.emplace_back(uniform(1, 5), uniform(1, 3));
  return cutpoint::Measure(std::move(b), std::move(d));
}

}  // namespace testing_support
