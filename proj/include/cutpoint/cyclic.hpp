#pragma once

// Cyclic sets presented as a simplicial set plus the cyclic operator t_n on
// every n-simplex (degenerate ones included, since t does not preserve
// nondegeneracy).

#include "cutpoint/lambda.hpp"
#include "cutpoint/sset.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cutpoint {

class CyclicSet {
public:
  /// tau[n][k] is the index of t_n(x) where x is the k-th n-simplex in
  /// all_simplices(*base, n) order; one row per dimension 0..dim_bound.
  CyclicSet(std::shared_ptr<const SimplicialSet> base, std::vector<std::vector<int>> tau);

  const std::shared_ptr<const SimplicialSet>& base() const { return base_; }
  int dim_bound() const { return base_->dim_bound(); }
  const std::vector<std::vector<int>>& tau_table() const { return tau_; }
  const std::vector<NormalizedSimplex>& simplices(int n) const;
  int index_of(const NormalizedSimplex& s) const;

  NormalizedSimplex tau(const NormalizedSimplex& s) const;
  /// t^a for any integer a.
  NormalizedSimplex tau_power(const NormalizedSimplex& s, long a) const;

private:
  std::shared_ptr<const SimplicialSet> base_;
  std::vector<std::vector<int>> tau_;
  std::vector<std::vector<NormalizedSimplex>> all_;
  std::vector<std::map<NormalizedSimplex, int>> index_;
};

/// Checks that every t_n is a permutation with t^{n+1} = id and that
///   d_0 t = d_n,  d_i t = t d_{i-1} (1 <= i <= n),
///   s_0 t = t^2 s_n,  s_i t = t s_{i-1} (1 <= i <= n)
/// hold on every simplex up to dim_bound.
ValidationReport validate_cyclic(const CyclicSet& x);

/// X(psi)(s) for psi : [k]_cyc -> [dim s]_cyc, via psi = g o tau^a.
NormalizedSimplex act_cyclic(const CyclicSet& x, const NormalizedSimplex& s, const CycMorphism& psi);

/// The simplicial set obtained by forgetting t.
std::shared_ptr<const SimplicialSet> underlying_simplicial(const CyclicSet& x);

/// Cyclic nerve: an n-simplex is a cyclic word (g_0, ..., g_n) of morphisms
/// g_i : c_i -> c_{i+1}, the last one closing the loop back to c_0.
struct CyclicNerve {
  FiniteCategory category;
  std::shared_ptr<const CyclicSet> set;
  /// Nondegenerate words by dimension, in presentation order.
  std::vector<std::vector<std::vector<int>>> words;

  /// The full word of a possibly degenerate simplex.
  std::vector<int> expand(const NormalizedSimplex& s) const;
  NormalizedSimplex normalize(const std::vector<int>& word) const;

  /// Position of each nondegenerate word within its dimension.
  std::vector<std::map<std::vector<int>, int>> lookup;
};

CyclicNerve cyclic_nerve(const FiniteCategory& c, int dim_bound);

/// The representable cyclic set with k-simplices Hom([k]_cyc, [n]_cyc),
/// acting by precomposition.
struct CyclicRepresentable {
  int n;
  std::shared_ptr<const CyclicSet> set;
  std::vector<std::vector<CycMorphism>> nondegenerate;

  NormalizedSimplex encode(const CycMorphism& psi) const;
  CycMorphism decode(const NormalizedSimplex& s) const;
};

CyclicRepresentable representable_cyclic(int n, int dim_bound);

/// A_cyc for the linear order listing `order` from least to greatest:
/// morphisms a -> b are f 1^w for a <= b and f^* 1^w for a > b, where f is
/// the arrow of A between them; 1_a is (id_a)^*.
ZPlusCategory ord_to_cyc(const std::vector<std::string>& order, int winding_bound = default_winding_bound);

struct CategoryFunctor {
  std::vector<int> objects;
  std::vector<int> morphisms;
};

bool is_functor(const FiniteCategory& c, const FiniteCategory& d, const CategoryFunctor& f);

/// Image of a simplex under the map of cyclic nerves induced by f.
NormalizedSimplex map_cyclic_nerve(const CyclicNerve& from, const CyclicNerve& to, const CategoryFunctor& f,
                                   const NormalizedSimplex& s);

}  // namespace cutpoint
