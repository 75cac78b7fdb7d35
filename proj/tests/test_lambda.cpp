#include "doctest.h"

#include "cutpoint/lambda.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace cutpoint;

namespace {

// Brute force over integer sequences: phi(0) in 0..n, nondecreasing,
// phi(m) <= phi(0) + n + 1.
long brute_hom_count(int m, int n) {
  long count = 0;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  const int hi = 2 * n + 1;
  std::function<void(int)> rec = [&](int i) {
    if (i > m) {
      bool ok = v[0] <= n && v[static_cast<std::size_t>(m)] <= v[0] + n + 1;
      for (int k = 1; k <= m; ++k) ok = ok && v[static_cast<std::size_t>(k - 1)] <= v[static_cast<std::size_t>(k)];
      count += ok;
      return;
    }
    for (int x = 0; x <= hi; ++x) {
      v[static_cast<std::size_t>(i)] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

// Relabels objects of c: object x becomes perm[x].
ZPlusCategory permute(const ZPlusCategory& c, const std::vector<int>& perm) {
  std::vector<std::string> objects(c.objects().size());
  for (int x = 0; x < c.object_count(); ++x)
    objects[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = c.objects()[static_cast<std::size_t>(x)];
  std::vector<ZMorphism> morphisms;
  for (const auto& m : c.morphisms())
    morphisms.push_back({m.name, perm[static_cast<std::size_t>(m.source)], perm[static_cast<std::size_t>(m.target)], m.winding});
  std::vector<int> ids(c.identities().size());
  std::vector<int> units(c.units().size());
  for (int x = 0; x < c.object_count(); ++x) {
    ids[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = c.identity(x);
    units[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = c.unit(x);
  }
  return ZPlusCategory(objects, morphisms, ids, units, c.table(), c.winding_bound());
}

ZPlusCategory with_table(const ZPlusCategory& c, ZPlusCategory::Table t) {
  return ZPlusCategory(c.objects(), c.morphisms(), c.identities(), c.units(), std::move(t), c.winding_bound());
}

}  // namespace

TEST_CASE("compose_cyc examples") {
  const auto f = CycMorphism(1, 2, {0, 2});
  CHECK(compose_cyc(CycMorphism::identity(1), f) == f);
  CHECK(compose_cyc(f, CycMorphism::identity(2)) == f);
  const auto r = CycMorphism::rotation(2);
  CHECK(r != CycMorphism::identity(2));
  CHECK(compose_cyc(r, r) != CycMorphism::identity(2));
  CHECK(compose_cyc(compose_cyc(r, r), r) == CycMorphism::identity(2));

  const CycMorphism c0(1, 0, {0, 0});
  const CycMorphism c1(1, 0, {0, 1});
  CHECK(compose_cyc(CycMorphism::rotation(1), c0) == c1);
  CHECK(compose_cyc(CycMorphism::rotation(1), c1) == c0);
  CHECK_THROWS_AS(compose_cyc(c0, f), std::invalid_argument);
  CHECK_THROWS_AS(CycMorphism(1, 0, {0, 2}), std::invalid_argument);
  CHECK(CycMorphism(1, 1, {2, 3}) == CycMorphism::identity(1));
}

TEST_CASE("hom counts") {
  CHECK(enumerate_hom(0, 0).size() == 1);
  CHECK(enumerate_hom(1, 0).size() == 2);
  CHECK(enumerate_hom(0, 1).size() == 2);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto homs = enumerate_hom(m, n);
      CHECK(static_cast<long>(homs.size()) == brute_hom_count(m, n));
      CHECK(static_cast<long>(homs.size()) == hom_count(m, n));
      CHECK(std::set<CycMorphism>(homs.begin(), homs.end()).size() == homs.size());
    }
  CHECK_THROWS_AS(enumerate_hom(9, 0), std::out_of_range);
}

TEST_CASE("composition is associative and unital (m,n,k <= 2)") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (const auto& f : enumerate_hom(a, b)) {
        CHECK(compose_cyc(CycMorphism::identity(a), f) == f);
        CHECK(compose_cyc(f, CycMorphism::identity(b)) == f);
        for (int c = 0; c <= 2; ++c)
          for (const auto& g : enumerate_hom(b, c))
            for (const auto& h : enumerate_hom(c, 1))
              CHECK(compose_cyc(compose_cyc(f, g), h) == compose_cyc(f, compose_cyc(g, h)));
      }
}

TEST_CASE("automorphism groups are cyclic of order n+1") {
  for (int n = 0; n <= 3; ++n) {
    const auto c = cyc_object(n, 3);
    int autos = 0;
    for (const auto& f : enumerate_hom(n, n)) autos += is_isomorphism(functor_of(f, c, c), c, c);
    CHECK(autos == n + 1);
    std::set<CycMorphism> powers;
    for (int a = 0; a <= n; ++a) powers.insert(rotation_power(n, a));
    CHECK(static_cast<int>(powers.size()) == n + 1);
    CHECK(rotation_power(n, n + 1) == CycMorphism::identity(n));
    CHECK(rotation_power(n, -1) == rotation_power(n, n));
  }
}

TEST_CASE("enumerate_zfunctors examples") {
  CHECK(enumerate_zfunctors(cyc_object(0, 1), cyc_object(0, 3)).size() == 1);
  CHECK(enumerate_zfunctors(cyc_object(1, 1), cyc_object(0, 3)).size() == 2);
  CHECK(enumerate_zfunctors(cyc_object(0, 1), cyc_object(1, 3)).size() == 2);
  CHECK_THROWS_AS(enumerate_zfunctors(cyc_object(1, 3), cyc_object(1, 3)), TruncationError);
}

TEST_CASE("periodic maps and truncated Z+-functors are in bijection (m,n <= 3)") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto c = cyc_object(m, 1);
      const auto d = cyc_object(n, 3);
      const auto functors = enumerate_zfunctors(c, d);
      std::set<ZFunctor> images;
      for (const auto& phi : enumerate_hom(m, n)) {
        const auto F = functor_of(phi, c, d);
        std::string why;
        CHECK_MESSAGE(is_zfunctor(F, c, d, &why), why);
        images.insert(F);
      }
      CHECK(images.size() == functors.size());
      CHECK(images == std::set<ZFunctor>(functors.begin(), functors.end()));
    }
}

TEST_CASE("model composition matches functor composition") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const auto A = cyc_object(a, 1);
        const auto B = cyc_object(b, 2);
        const auto C = cyc_object(c, 3);
        for (const auto& f : enumerate_hom(a, b)) {
          const auto Ff = functor_of(f, A, B);
          for (const auto& g : enumerate_hom(b, c)) {
            const auto Fg = functor_of(g, B, C);
            const auto Fgf = functor_of(compose_cyc(f, g), A, C);
            for (int x = 0; x <= a; ++x)
              CHECK(Fgf.objects[static_cast<std::size_t>(x)] == Fg.objects[static_cast<std::size_t>(Ff.objects[static_cast<std::size_t>(x)])]);
            for (int h = 0; h < A.morphism_count(); ++h)
              CHECK(Fgf.morphisms[static_cast<std::size_t>(h)] == Fg.morphisms[static_cast<std::size_t>(Ff.morphisms[static_cast<std::size_t>(h)])]);
          }
        }
      }
}

TEST_CASE("every morphism factors uniquely through a rotation") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& psi : enumerate_hom(m, n)) {
        int found = 0;
        for (int a = 0; a <= m; ++a)
          for (const auto& g : all_monotone_maps(m, n))
            found += compose_cyc(rotation_power(m, a), CycMorphism::from_monotone(g)) == psi;
        CHECK(found == 1);
        const auto [g, a] = cyclic_factor(psi);
        CHECK(compose_cyc(rotation_power(m, a), CycMorphism::from_monotone(g)) == psi);
      }
}

TEST_CASE("check_zplus on [n]_cyc") {
  const auto v = check_zplus(cyc_object(2, 3));
  REQUIRE(v.ok);
  CHECK(v.order == std::vector{0, 1, 2});
  CHECK(v.m.at({0, 1}) == 0);
  CHECK(v.m.at({1, 2}) == 0);
  CHECK(is_isomorphism(v.certificate, cyc_object(2, 3), cyc_object(2, 3)));

  for (int n = 0; n <= 5; ++n) {
    const auto c = cyc_object(n, 2);
    const auto r = check_zplus(c);
    REQUIRE(r.ok);
    CHECK(static_cast<int>(r.order.size()) == n + 1);
    for (int x = 0; x <= n; ++x)
      for (int y = 0; y <= n; ++y) CHECK(r.m.at({x, y}) == (y < x ? 1 : 0));
  }
  CHECK_THROWS_AS(check_zplus(cyc_object(1, 1)), TruncationError);
}

TEST_CASE("check_zplus recovers the cyclic order starting at the base object") {
  const std::vector<int> perm{2, 0, 3, 1};
  const auto c = permute(cyc_object(3, 2), perm);
  const auto v = check_zplus(c);
  REQUIRE(v.ok);
  // Cyclic order of the relabeled objects is perm[0..3] = 2,0,3,1; base is 0.
  CHECK(v.order == std::vector{0, 3, 1, 2});
}

TEST_CASE("check_zplus rejects a category with an empty hom") {
  // Two disjoint copies of [0]_cyc.
  const auto p = cyc_object(0, 2);
  std::vector<ZMorphism> morphisms;
  ZPlusCategory::Table table;
  for (int copy = 0; copy < 2; ++copy) {
    for (const auto& m : p.morphisms()) morphisms.push_back({m.name + "#" + std::to_string(copy), copy, copy, m.winding});
    const int off = copy * p.morphism_count();
    for (const auto& [fg, h] : p.table()) table[{fg.first + off, fg.second + off}] = h + off;
  }
  const ZPlusCategory c({"a", "b"}, morphisms, {0, 3}, {1, 4}, table, 2);
  CHECK(c.problems().empty());
  const auto v = check_zplus(c);
  CHECK_FALSE(v.ok);
  CHECK(v.counterexample == std::vector{0, 1});
}

TEST_CASE("the additive identity for m needs the composite winding correction") {
  // In [2]_cyc with base 0: m(0,2) + m(2,1) = 1 while m(0,1) = 0, and the
  // composite 0->2->1 winds once.
  const auto c = cyc_object(2, 3);
  const auto v = check_zplus(c);
  REQUIRE(v.ok);
  CHECK(v.m.at({0, 2}) + v.m.at({2, 1}) == 1);
  CHECK(v.m.at({0, 1}) == 0);
  const auto k = c.compose(*c.find(0, 2, 0), *c.find(2, 1, 0));
  REQUIRE(k);
  CHECK(c.morphism(*k).winding == 1);
}

TEST_CASE("single-entry table mutations of [2]_cyc are all rejected") {
  const auto c = cyc_object(2, 2);
  REQUIRE(check_zplus(c).ok);
  int mutations = 0;
  int rejected = 0;
  for (const auto& [key, h] : c.table()) {
    auto t = c.table();
    t.erase(key);
    ++mutations;
    rejected += !check_zplus(with_table(c, t)).ok;
    for (int other = 0; other < c.morphism_count(); ++other) {
      if (other == h) continue;
      auto u = c.table();
      u[key] = other;
      ++mutations;
      rejected += !check_zplus(with_table(c, u)).ok;
    }
  }
  CHECK(mutations > 0);
  CHECK(rejected == mutations);
}

TEST_CASE("dualize examples") {
  const auto d0 = dualize(cyc_object(0, 3));
  CHECK(d0.category.object_count() == 1);
  CHECK(d0.category.objects()[0] == "w(1)");
  CHECK(check_zplus(d0.category).ok);

  const auto d1 = dualize(cyc_object(1, 3));
  CHECK(d1.category.object_count() == 2);
  CHECK(d1.category.objects() == std::vector<std::string>{"w(1,0)", "w(0,1)"});

  const auto p = cyc_object(0, 2);
  std::vector<ZMorphism> morphisms = p.morphisms();
  morphisms.push_back({"stray", 0, 0, 1});
  CHECK_THROWS_AS(dualize(ZPlusCategory(p.objects(), morphisms, p.identities(), p.units(), p.table(), 2)),
                  std::invalid_argument);
}

TEST_CASE("duals of [n]_cyc are [n]_cyc and F is an isomorphism (n <= 4, winding bound 3)") {
  for (int n = 0; n <= 4; ++n) {
    const auto c = cyc_object(n, 3);
    const auto dual = dualize(c);
    const auto v = check_zplus(dual.category);
    REQUIRE(v.ok);
    CHECK(static_cast<int>(v.order.size()) == n + 1);
    std::string why;
    CHECK_MESSAGE(is_isomorphism(v.certificate, cyc_object(n, 3), dual.category, &why), why);

    const auto bidual = dualize(dual.category);
    const auto unit = double_dual_unit(c, dual, bidual);
    CHECK_MESSAGE(is_isomorphism(unit, c, bidual.category, &why), why);
  }
}

TEST_CASE("dual objects of [n]_cyc are weight vectors summing to 1") {
  for (int n = 0; n <= 3; ++n) {
    const auto dual = dualize(cyc_object(n, 2));
    CHECK(dual.category.object_count() == n + 1);
    for (const auto& label : dual.category.objects())
      CHECK(std::count(label.begin(), label.end(), '1') == 1);
  }
}

TEST_CASE("the double-dual unit is natural against every morphism (m,n <= 2)") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (const auto& phi : enumerate_hom(m, n)) {
        std::string why;
        CHECK_MESSAGE(unit_is_natural(phi, 3, &why), why);
      }
}
