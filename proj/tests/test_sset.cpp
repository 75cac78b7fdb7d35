#include "doctest.h"

#include "cutpoint/sset.hpp"

#include <set>

using namespace cutpoint;

namespace {

// The monotone map [dim] -> [n] represented by a simplex of Delta^n.
MonotoneMap as_map(int n, const NormalizedSimplex& s) {
  const auto verts = standard_simplex_vertices(n, s.base());
  const auto sigma = s.surjection();
  std::vector<int> v;
  for (int x : sigma.values()) v.push_back(verts[static_cast<std::size_t>(x)]);
  return MonotoneMap(s.dim(), n, v);
}

// Strictly increasing chains of length d+1 in the product order on [p] x [q].
int count_product_chains(int p, int q, int d) {
  int count = 0;
  for (const auto& a : all_monotone_maps(d, p))
    for (const auto& b : all_monotone_maps(d, q)) {
      bool injective = true;
      for (int i = 0; i < d; ++i)
        if (a(i) == a(i + 1) && b(i) == b(i + 1)) injective = false;
      count += injective;
    }
  return count;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::shared_ptr<const SimplicialSet> mutate_faces(const SimplicialSet& x, int dim, int index, int i, int j) {
  auto faces = x.faces();
  std::swap(faces[static_cast<std::size_t>(dim)][static_cast<std::size_t>(index)][static_cast<std::size_t>(i)],
            faces[static_cast<std::size_t>(dim)][static_cast<std::size_t>(index)][static_cast<std::size_t>(j)]);
  return std::make_shared<SimplicialSet>(x.dim_bound(), x.labels(), faces);
}

}  // namespace

TEST_CASE("validate: representables pass, mutations fail") {
  CHECK(validate(*standard_simplex(1)).ok());
  CHECK(validate(*standard_simplex(3)).ok());

  const auto broken = mutate_faces(*standard_simplex(2), 2, 0, 0, 1);
  const auto report = validate(*broken);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().identity == "d_0 d_2 = d_1 d_0");

  // A face pointer of Delta^1 redirected to a vertex that does not exist.
  auto faces = standard_simplex(1)->faces();
  faces[1][0][0] = NormalizedSimplex(SimplexRef{0, 7});
  const SimplicialSet dangling(1, standard_simplex(1)->labels(), faces);
  const auto r2 = validate(dangling);
  REQUIRE_FALSE(r2.ok());
  CHECK(r2.violations.front().identity == "face reference");

  CHECK(validate(*nerve(FiniteCategory::ordinal(2), 4)).ok());
}

TEST_CASE("act examples on Delta^1") {
  const auto d1 = standard_simplex(1);
  const NormalizedSimplex top(SimplexRef{1, 0});
  CHECK(act(*d1, top, MonotoneMap::identity(1)) == top);
  CHECK(act(*d1, top, MonotoneMap(1, {0, 0, 1})) == NormalizedSimplex(SimplexRef{1, 0}, {0}));
  CHECK(act(*d1, top, MonotoneMap(1, {1})) == NormalizedSimplex(SimplexRef{0, 1}));
  CHECK_THROWS_AS(act(*d1, top, MonotoneMap(2, {0, 1})), std::invalid_argument);
}

TEST_CASE("normalize_degenerate examples") {
  const auto d1 = standard_simplex(1);
  using K = SimplicialOperator::Kind;
  const SimplexRef edge{1, 0};
  CHECK(normalize_degenerate(*d1, edge, {}) == NormalizedSimplex(edge));

  const SimplicialOperator s0[] = {{K::Degeneracy, 0}};
  CHECK(normalize_degenerate(*d1, edge, s0) == NormalizedSimplex(edge, {0}));
  CHECK(as_map(1, normalize_degenerate(*d1, edge, s0)) == MonotoneMap(1, {0, 0, 1}));

  // (0,0,1,1) reached by two different operator orders.
  const SimplicialOperator a[] = {{K::Degeneracy, 0}, {K::Degeneracy, 2}};
  const SimplicialOperator b[] = {{K::Degeneracy, 1}, {K::Degeneracy, 0}};
  CHECK(normalize_degenerate(*d1, edge, a) == NormalizedSimplex(edge, {0, 2}));
  CHECK(normalize_degenerate(*d1, edge, b) == NormalizedSimplex(edge, {0, 2}));
  CHECK(as_map(1, NormalizedSimplex(edge, {0, 2})) == MonotoneMap(1, {0, 0, 1, 1}));

  // Face of a degeneracy: d_1 s_0 = id.
  const SimplicialOperator c[] = {{K::Degeneracy, 0}, {K::Face, 1}};
  CHECK(normalize_degenerate(*d1, edge, c) == NormalizedSimplex(edge));

  const SimplicialOperator bad[] = {{K::Face, 3}};
  CHECK_THROWS_AS(normalize_degenerate(*d1, edge, bad), std::out_of_range);
}

TEST_CASE("representable action agrees with composition of monotone maps") {
  for (int n = 0; n <= 3; ++n) {
    const auto dn = standard_simplex(n);
    for (int m = 0; m <= 3; ++m)
      for (const auto& s : all_simplices(*dn, m))
        for (int k = 0; k <= 3; ++k)
          for (const auto& f : all_monotone_maps(k, m))
            CHECK(as_map(n, act(*dn, s, f)) == compose_monotone(f, as_map(n, s)));
  }
}

TEST_CASE("functoriality on fixtures (dims <= 4, exhaustive)") {
  const std::vector<std::shared_ptr<const SimplicialSet>> fixtures = {
      standard_simplex(2), nerve(FiniteCategory::cyclic_group(2), 3),
      product(standard_simplex(1), standard_simplex(1))};
  for (const auto& x : fixtures)
    for (int m = 0; m <= 3; ++m)
      for (const auto& s : all_simplices(*x, m))
        for (int a = 0; a <= 3; ++a)
          for (const auto& f : all_monotone_maps(a, m)) {
            const auto sf = act(*x, s, f);
            for (int b = 0; b <= 2; ++b)
              for (const auto& g : all_monotone_maps(b, a))
                CHECK(act(*x, sf, g) == act(*x, s, compose_monotone(g, f)));
          }
}

TEST_CASE("normal forms are idempotent") {
  const auto x = nerve(FiniteCategory::cyclic_group(3), 3);
  for (int m = 0; m <= 3; ++m)
    for (const auto& s : all_simplices(*x, m)) CHECK(act(*x, s, MonotoneMap::identity(m)) == s);
}

TEST_CASE("product shuffle counts") {
  const auto p11 = product(standard_simplex(1), standard_simplex(1));
  CHECK(p11->count_nondegenerate(2) == 2);
  CHECK(count_product_chains(1, 1, 2) == 2);
  const auto p21 = product(standard_simplex(2), standard_simplex(1));
  CHECK(p21->count_nondegenerate(3) == 3);

  for (int p = 0; p <= 5; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      const auto x = product(standard_simplex(p), standard_simplex(q));
      CHECK(validate(*x).ok());
      for (int d = 0; d <= p + q; ++d) CHECK(x->count_nondegenerate(d) == count_product_chains(p, q, d));
      CHECK(x->count_nondegenerate(p + q) == binomial(p + q, p));
    }
}

TEST_CASE("product with a point is isomorphic to the factor") {
  const auto x = nerve(FiniteCategory::ordinal(2), 3);
  const auto xp = product(x, standard_simplex(0));
  for (int d = 0; d <= x->top_dimension(); ++d) {
    CHECK(xp->count_nondegenerate(d) == x->count_nondegenerate(d));
    for (int k = 0; k < x->count_nondegenerate(d); ++k) {
      const auto& pr = xp->product()->pairs[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)];
      CHECK(pr.first == NormalizedSimplex(SimplexRef{d, k}));
    }
  }
}

TEST_CASE("product projections are simplicial") {
  const auto x = product(standard_simplex(2), standard_simplex(1));
  const auto& info = *x->product();
  for (int m = 0; m <= 3; ++m)
    for (const auto& s : all_simplices(*x, m))
      for (int a = 0; a <= 3; ++a)
        for (const auto& f : all_monotone_maps(a, m)) {
          const auto t = act(*x, s, f);
          const auto& [ta, tb] = info.pairs[static_cast<std::size_t>(t.base().dim)][static_cast<std::size_t>(t.base().index)];
          const auto& [sa, sb] = info.pairs[static_cast<std::size_t>(s.base().dim)][static_cast<std::size_t>(s.base().index)];
          // project(t) = (ta, tb) pulled back along t's degeneracies
          const auto pa = act(*info.left, ta, t.surjection());
          const auto pb = act(*info.right, tb, t.surjection());
          const auto qa = act(*info.left, act(*info.left, sa, s.surjection()), f);
          const auto qb = act(*info.right, act(*info.right, sb, s.surjection()), f);
          CHECK(pa == qa);
          CHECK(pb == qb);
        }
}

TEST_CASE("nerve examples") {
  const auto n1 = nerve(FiniteCategory::ordinal(1), 4);
  CHECK(n1->count_nondegenerate(0) == 2);
  CHECK(n1->count_nondegenerate(1) == 1);
  for (int d = 2; d <= 4; ++d) CHECK(n1->count_nondegenerate(d) == 0);

  const auto disc = nerve(FiniteCategory::discrete(3), 3);
  CHECK(disc->count_nondegenerate(0) == 3);
  CHECK(disc->count_nondegenerate(1) == 0);

  const auto chain = nerve(FiniteCategory::ordinal(2), 3);
  CHECK(chain->count_nondegenerate(2) == 1);
}

TEST_CASE("nerve nondegenerate simplices biject with identity-free chains") {
  const std::vector<FiniteCategory> cats = {FiniteCategory::ordinal(3), FiniteCategory::cyclic_group(2),
                                            FiniteCategory::cyclic_group(3), FiniteCategory::discrete(2)};
  for (const auto& c : cats) {
    CHECK(c.validate().empty());
    const auto x = nerve(c, 3);
    CHECK(validate(*x).ok());
    for (int n = 1; n <= 3; ++n) {
      // Brute force: all n-tuples of morphisms, keep composable identity-free ones.
      std::set<std::vector<int>> brute;
      std::vector<int> t(static_cast<std::size_t>(n), 0);
      const int mc = c.morphism_count();
      int total = 1;
      for (int i = 0; i < n; ++i) total *= mc;
      for (int code = 0; code < total; ++code) {
        int cc = code;
        for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = cc % mc, cc /= mc;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (c.is_identity(t[static_cast<std::size_t>(i)])) ok = false;
          if (i > 0 && c.morphism(t[static_cast<std::size_t>(i - 1)]).target != c.morphism(t[static_cast<std::size_t>(i)]).source) ok = false;
        }
        if (ok) brute.insert(t);
      }
      const auto chains = nerve_chains(c, n);
      CHECK(std::set<std::vector<int>>(chains.begin(), chains.end()) == brute);
      CHECK(x->count_nondegenerate(n) == static_cast<int>(brute.size()));
    }
  }
}

TEST_CASE("count_nondegenerate ranges") {
  CHECK(standard_simplex(2)->count_nondegenerate(2) == 1);
  CHECK(product(standard_simplex(1), standard_simplex(1))->count_nondegenerate(2) == 2);
  CHECK(standard_simplex(1, 5)->count_nondegenerate(5) == 0);
  CHECK_THROWS_AS(standard_simplex(1)->count_nondegenerate(5), std::out_of_range);
  CHECK_THROWS_AS(standard_simplex(1)->count_nondegenerate(-1), std::out_of_range);
}

TEST_CASE("representable_dimension recognizes Delta^n only") {
  CHECK(representable_dimension(*standard_simplex(3)) == 3);
  CHECK(representable_dimension(*nerve(FiniteCategory::ordinal(2), 3)) == 2);
  CHECK_FALSE(representable_dimension(*nerve(FiniteCategory::cyclic_group(2), 2)).has_value());
}
