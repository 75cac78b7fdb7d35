// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "cutpoint/circle.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace cutpoint;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All monotone maps [n] -> [m] as value lists.
std::vector<std::vector<int>> monotone_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i > n) {
      out.push_back(v);
      return;
    }
    for (int a = lo; a <= m; ++a) {
      v[static_cast<std::size_t>(i)] = a;
      rec(i + 1, a);
    }
  };
  rec(0, 0);
  return out;
}

// d-simplices (a, b) of Delta^p x Delta^q not in the image of a common degeneracy.
long joint_nondegenerate(int p, int q, int d) {
  long count = 0;
  const auto as = monotone_maps(d, p);
  const auto bs = monotone_maps(d, q);
  for (const auto& a : as)
    for (const auto& b : bs) {
      bool degenerate = false;
      for (int j = 0; j < d && !degenerate; ++j)
        degenerate = a[static_cast<std::size_t>(j)] == a[static_cast<std::size_t>(j) + 1] &&
                     b[static_cast<std::size_t>(j)] == b[static_cast<std::size_t>(j) + 1];
      count += !degenerate;
    }
  return count;
}

std::string str(const Rational& r) { return r.str(); }

Outcome product_bijection() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  long points = 0;
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      const auto x = standard_simplex(p);
      const auto y = standard_simplex(q);
      const auto xy = product(x, y);
      for (int trial = 0; trial < 500; ++trial) {
        const auto px = random_point(x);
        const auto py = random_point(y);
        const auto [sx, sy] = split_product(merge_product(xy, px, py));
        o.require(sx == px && sy == py, "split(merge) differs on Delta^" + std::to_string(p) + " x Delta^" + std::to_string(q));
        const auto r = random_point(xy);
        const auto [rx, ry] = split_product(r);
        o.require(merge_product(xy, rx, ry) == r, "merge(split) differs on Delta^" + std::to_string(p) + " x Delta^" + std::to_string(q));
        points += 2;
      }
    }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << points << " round trips over 21 products in " << seconds << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome shuffle_counts() {
  Outcome o;
  o.require(product(standard_simplex(1), standard_simplex(1))->count_nondegenerate(2) == 2, "Delta^1 x Delta^1");
  o.require(product(standard_simplex(2), standard_simplex(1))->count_nondegenerate(3) == 3, "Delta^2 x Delta^1");
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      const auto xy = product(standard_simplex(p), standard_simplex(q));
      const std::string name = "Delta^" + std::to_string(p) + " x Delta^" + std::to_string(q);
      for (int d = 0; d <= p + q; ++d)
        o.require(xy->count_nondegenerate(d) == joint_nondegenerate(p, q, d), name + " in dimension " + std::to_string(d));
      o.require(xy->count_nondegenerate(p + q) == binomial(p + q, p), name + " top count");
      o.require(joint_nondegenerate(p, q, p + q + 1) == 0, name + " above the top");
    }
  if (o.pass) o.detail = "all p+q <= 5 match brute force and C(p+q,p)";
  return o;
}

Outcome metric() {
  Outcome o;
  const auto d1 = standard_simplex(1);
  const auto lebesgue = Measure::lebesgue();
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_point(d1);
    const auto v = random_point(d1);
    const Rational expect = abs(to_coordinates(u)[0] - to_coordinates(v)[0]);
    const Rational d = distance(lebesgue, u, v);
    o.require(d == expect, "distance " + str(d) + " vs coordinate gap " + str(expect));
    std::set<Rational> cuts(u.cuts().begin(), u.cuts().end());
    cuts.insert(v.cuts().begin(), v.cuts().end());
    const std::size_t before = cuts.size();
    while (cuts.size() < before + 5) cuts.insert(interior_rational());
    const Rational refined = distance_over(lebesgue, u, v, {cuts.begin(), cuts.end()});
    o.require(refined == d, "refined distance " + str(refined) + " vs " + str(d));
  }
  for (const auto& x : {d1, standard_simplex(2)})
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_point(x);
      const auto b = random_point(x);
      const auto c = random_point(x);
      o.require(distance(lebesgue, a, c) <= distance(lebesgue, a, b) + distance(lebesgue, b, c), "triangle inequality");
    }
  if (o.pass) o.detail = "100 pairs, 100 refinements, 200 triples";
  return o;
}

Outcome homeo_action() {
  Outcome o;
  const auto xy = product(standard_simplex(2), standard_simplex(1));
  const std::vector<std::shared_ptr<const SimplicialSet>> spaces{standard_simplex(1), standard_simplex(3), xy};
  for (const auto& x : spaces)
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = random_point(x);
      const auto f = random_homeo();
      const auto g = random_homeo();
      o.require(apply_homeo(PLHomeo::identity(), p) == p, "identity acts nontrivially");
      o.require(apply_homeo(compose(f, g), p) == apply_homeo(f, apply_homeo(g, p)), "(fg).p != f.(g.p)");
      o.require(apply_homeo(f.inverse(), apply_homeo(f, p)) == p, "inverse does not undo");
      o.require(compose(compose(f, g), f) == compose(f, compose(g, f)), "composition not associative");
    }
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_point(xy);
    const auto f = random_homeo();
    const auto [a, b] = split_product(p);
    const auto [fa, fb] = split_product(apply_homeo(f, p));
    o.require(fa == apply_homeo(f, a) && fb == apply_homeo(f, b), "action does not commute with split_product");
  }
  if (o.pass) o.detail = "300 law checks, 100 product points";
  return o;
}

Outcome duality() {
  Outcome o;
  for (int n = 0; n <= 4; ++n) {
    const auto c = cyc_object(n, 3);
    const auto dual = dualize(c);
    const auto v = check_zplus(dual.category);
    const std::string name = "[" + std::to_string(n) + "]_cyc";
    o.require(v.ok && static_cast<int>(v.order.size()) == n + 1, name + ": dual is not [" + std::to_string(n) + "]_cyc");
    if (!o.pass) break;
    std::string why;
    o.require(is_isomorphism(v.certificate, cyc_object(n, dual.category.winding_bound()), dual.category, &why),
              name + ": dual certificate " + why);
    const auto bidual = dualize(dual.category);
    o.require(is_isomorphism(double_dual_unit(c, dual, bidual), c, bidual.category, &why), name + ": F_C " + why);
  }
  if (o.pass) o.detail = "n <= 4 at winding bound 3";
  return o;
}

Outcome hom_counts() {
  Outcome o;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto c = cyc_object(m, 1);
      const auto d = cyc_object(n, 3);
      const auto functors = enumerate_zfunctors(c, d);
      std::set<ZFunctor> images;
      for (const auto& phi : enumerate_hom(m, n)) images.insert(functor_of(phi, c, d));
      o.require(images == std::set<ZFunctor>(functors.begin(), functors.end()),
                "Hom(" + std::to_string(m) + "," + std::to_string(n) + ") differs from the functor count");
      o.require(static_cast<long>(enumerate_hom(m, n).size()) == hom_count(m, n), "hom_count disagrees");
    }
  o.require(enumerate_hom(0, 0).size() == 1, "|Hom([0],[0])|");
  o.require(enumerate_hom(1, 0).size() == 2, "|Hom([1],[0])|");
  o.require(enumerate_hom(0, 1).size() == 2, "|Hom([0],[1])|");
  for (int n = 0; n <= 3; ++n) {
    const auto homs = enumerate_hom(n, n);
    const auto id = CycMorphism::identity(n);
    int automorphisms = 0;
    for (const auto& f : homs) {
      bool invertible = false;
      for (const auto& g : homs) invertible |= compose_cyc(f, g) == id && compose_cyc(g, f) == id;
      automorphisms += invertible;
    }
    o.require(automorphisms == n + 1, "|Aut([" + std::to_string(n) + "])| = " + std::to_string(automorphisms));
  }
  if (o.pass) o.detail = "m,n <= 3; |Aut([n])| = n+1 for n <= 3";
  return o;
}

Outcome order_recovery() {
  Outcome o;
  const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
  for (std::size_t k = 1; k <= names.size(); ++k) {
    const std::vector<std::string> order(names.begin(), names.begin() + static_cast<long>(k));
    const auto v = check_zplus(ord_to_cyc(order, k <= 4 ? 3 : 2));
    o.require(v.ok && v.order.size() == k, "|A| = " + std::to_string(k) + ": " + v.reason);
  }
  const auto c = ord_to_cyc({"a", "b", "c"}, 2);
  auto with_table = [&](ZPlusCategory::Table t) {
    return ZPlusCategory(c.objects(), c.morphisms(), c.identities(), c.units(), std::move(t), c.winding_bound());
  };
  int mutations = 0;
  int rejected = 0;
  for (const auto& [key, h] : c.table()) {
    auto t = c.table();
    t.erase(key);
    ++mutations;
    rejected += !check_zplus(with_table(t)).ok;
    for (int other = 0; other < c.morphism_count(); ++other) {
      if (other == h) continue;
      auto u = c.table();
      u[key] = other;
      ++mutations;
      rejected += !check_zplus(with_table(u)).ok;
    }
  }
  o.require(mutations > 0 && rejected == mutations,
            std::to_string(rejected) + " of " + std::to_string(mutations) + " mutations rejected");
  if (o.pass) o.detail = "|A| <= 6 recovered; " + std::to_string(mutations) + " of " + std::to_string(mutations) + " mutations rejected";
  return o;
}

Outcome circle() {
  Outcome o;
  const int den = 64;
  const auto rep0 = representable_cyclic(0, 3);
  const auto base = rep0.set->base();

  // The one-vertex, one-edge circle written out by hand.
  const auto s1 = std::make_shared<const SimplicialSet>(
      3, std::vector<std::vector<std::string>>{{"v"}, {"e"}},
      SimplicialSet::FaceTable{{}, {{NormalizedSimplex({0, 0}), NormalizedSimplex({0, 0})}}});
  o.require(validate(*s1).ok(), "hand-written circle invalid");
  for (int d = 0; d <= 3; ++d) o.require(base->count_nondegenerate(d) == s1->count_nondegenerate(d), "underlying set is not the circle");
  o.require(base->faces()[1] == s1->faces()[1], "underlying faces differ from the circle");

  std::set<std::vector<Rational>> coords;
  std::set<std::pair<std::vector<Rational>, SimplexRef>> cyc_points, interval_points;
  for (int a = 0; a < den; ++a) {
    const Rational x(a, den);
    const auto p = from_cyc_coordinates(rep0, {x});
    o.require(cyc_coordinates(rep0, p) == std::vector<Rational>{x}, "coordinates do not round trip at " + str(x));
    o.require(p == normalize_cyclic_point(rep0.set, {x}, NormalizedSimplex({0, 0})), "grid point missed at " + str(x));
    coords.insert(cyc_coordinates(rep0, p));
    cyc_points.emplace(p.cuts(), p.simplex());
    for (int b = 0; b < den; ++b) {
      const auto q = apply_circle_homeo(CirclePLHomeo::rotation(Rational(b, den)), p);
      o.require(cyc_coordinates(rep0, q) == std::vector<Rational>{Rational((a + b) % den, den)}, "rotation incompatible");
    }
    const auto cut = cut_at_basepoint(p);
    o.require(join_at_basepoint(rep0.set, cut) == p, "cut_at_basepoint does not round trip at " + str(x));
    const RealizationPoint on_s1(s1, cut.cuts(), cut.simplex());
    o.require(cut_at_basepoint(join_at_basepoint(rep0.set, RealizationPoint(base, on_s1.cuts(), on_s1.simplex()))) == cut,
              "join does not round trip");
    interval_points.emplace(on_s1.cuts(), on_s1.simplex());
  }
  o.require(coords.size() == static_cast<std::size_t>(den) && cyc_points.size() == static_cast<std::size_t>(den), "grid not bijective");
  // Grid points of the simplicial circle: the vertex and the edge cut at a/64.
  std::set<std::pair<std::vector<Rational>, SimplexRef>> grid{{{}, SimplexRef{0, 0}}};
  for (int a = 1; a < den; ++a) grid.emplace(std::vector<Rational>{Rational(a, den)}, SimplexRef{1, 0});
  o.require(interval_points == grid, "cut_at_basepoint is not onto the grid of the simplicial circle");
  if (o.pass) o.detail = "64-point grid, 4096 rotations";
  return o;
}

Outcome nerves() {
  Outcome o;
  const auto n1 = nerve(FiniteCategory::ordinal(1), 5);
  const std::vector<int> expect{2, 1, 0, 0, 0, 0};
  for (int d = 0; d <= 5; ++d)
    o.require(n1->count_nondegenerate(d) == expect[static_cast<std::size_t>(d)], "N[1] count in dimension " + std::to_string(d));
  const int den = 64;
  std::set<Rational> values;
  auto visit = [&](const RealizationPoint& p) {
    const auto x = to_coordinates(p);
    o.require(x.size() == 1 && from_coordinates(n1, x) == p, "N[1] coordinates do not round trip");
    values.insert(x.at(0));
  };
  visit(RealizationPoint(n1, {}, {0, 0}));
  visit(RealizationPoint(n1, {}, {0, 1}));
  for (int a = 1; a < den; ++a) visit(RealizationPoint(n1, {Rational(a, den)}, {1, 0}));
  std::set<Rational> grid;
  for (int a = 0; a <= den; ++a) grid.insert(Rational(a, den));
  o.require(values == grid, "N[1] points do not cover the grid of [0,1]");

  const auto z2 = cyclic_nerve(FiniteCategory::cyclic_group(2), 4);
  o.require(z2.set->simplices(0).size() == 2 && z2.set->simplices(1).size() == 4, "cyclic nerve of Z/2 counts");
  for (int d = 0; d <= 4; ++d) {
    long order = 1;
    for (const auto& s : z2.set->simplices(d)) {
      long len = 1;
      for (auto t = z2.set->tau(s); !(t == s); t = z2.set->tau(t)) ++len;
      order = std::lcm(order, len);
      o.require(z2.set->tau_power(s, d + 1) == s, "t^(n+1) != id");
    }
    o.require(order == d + 1, "t has order " + std::to_string(order) + " in dimension " + std::to_string(d));
  }
  o.require(validate_cyclic(*z2.set).ok(), "cyclic identities fail on Z/2");
  if (o.pass) o.detail = "N[1] = (2,1,0,...), 65 grid points, Z/2 counts 2 and 4, t of order n+1 for n <= 4";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"product bijection", product_bijection}, {"shuffle counts", shuffle_counts},
      {"metric", metric},                       {"homeomorphism action", homeo_action},
      {"duality", duality},                     {"hom counts", hom_counts},
      {"order recovery", order_recovery},       {"cyclic realization", circle},
      {"nerve semantics", nerves}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu (%s): %s: %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
