#pragma once

// Finite presentations of simplicial sets. A presentation lists only the
// nondegenerate simplices of each dimension together with their faces; every
// degenerate simplex is carried implicitly as a NormalizedSimplex, i.e. a
// nondegenerate base plus a canonical degeneracy word.

#include "cutpoint/delta.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cutpoint {

struct SimplexRef {
  int dim = 0;
  int index = 0;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// base.dim plus the degeneracy word s_{j_k} ... s_{j_1} (j_1 < ... < j_k, j_1
/// applied first). The word is exactly the set of positions j where the
/// encoded surjection sigma satisfies sigma(j) == sigma(j+1).
class NormalizedSimplex {
public:
  NormalizedSimplex() = default;
  explicit NormalizedSimplex(SimplexRef base, std::vector<int> word = {});
  static NormalizedSimplex from_surjection(SimplexRef base, const MonotoneMap& sigma);

  const SimplexRef& base() const { return base_; }
  const std::vector<int>& word() const { return word_; }
  int dim() const { return base_.dim + static_cast<int>(word_.size()); }
  bool nondegenerate() const { return word_.empty(); }
  /// The surjection [dim] -> [base.dim] encoded by the word.
  MonotoneMap surjection() const;

  friend auto operator<=>(const NormalizedSimplex& a, const NormalizedSimplex& b) {
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.word_ <=> b.word_;
  }
  friend bool operator==(const NormalizedSimplex&, const NormalizedSimplex&) = default;

private:
  SimplexRef base_{};
  std::vector<int> word_;
};

std::string to_string(const NormalizedSimplex& s);

class SimplicialSet;

/// Bookkeeping attached to a levelwise product X x Y: for each nondegenerate
/// simplex of the product, the pair of (possibly degenerate) simplices it
/// projects to.
struct ProductStructure {
  std::shared_ptr<const SimplicialSet> left;
  std::shared_ptr<const SimplicialSet> right;
  std::vector<std::vector<std::pair<NormalizedSimplex, NormalizedSimplex>>> pairs;
  std::map<std::pair<NormalizedSimplex, NormalizedSimplex>, SimplexRef> lookup;
};

class SimplicialSet {
public:
  using FaceTable = std::vector<std::vector<std::vector<NormalizedSimplex>>>;

  /// labels[d] are the nondegenerate d-simplices; faces[d][k][i] is d_i of
  /// simplex k in dimension d (faces[0] is ignored). Structural sanity is
  /// checked by validate(), not here.
  SimplicialSet(int dim_bound, std::vector<std::vector<std::string>> labels, FaceTable faces);

  int dim_bound() const { return dim_bound_; }
  /// Highest dimension with a nondegenerate simplex.
  int top_dimension() const;
  /// Throws std::out_of_range for n < 0 or n > dim_bound.
  int count_nondegenerate(int n) const;
  bool contains(SimplexRef ref) const;

  const std::string& label(SimplexRef ref) const;
  const NormalizedSimplex& face(SimplexRef ref, int i) const;
  std::optional<SimplexRef> find(int dim, const std::string& label) const;

  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  const FaceTable& faces() const { return faces_; }

  const ProductStructure* product() const { return product_.get(); }
  void attach_product(std::shared_ptr<const ProductStructure> p) { product_ = std::move(p); }

private:
  int dim_bound_;
  std::vector<std::vector<std::string>> labels_;
  FaceTable faces_;
  std::shared_ptr<const ProductStructure> product_;
};

struct Violation {
  std::string identity;
  SimplexRef simplex;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks well-formedness of the face data and d_i d_j = d_{j-1} d_i (i < j)
/// on every nondegenerate simplex up to dim_bound. Mixed face/degeneracy
/// identities hold by construction of the normal form.
ValidationReport validate(const SimplicialSet& x);

/// X(f)(s) in normal form. Requires f.target() == s.dim().
NormalizedSimplex act(const SimplicialSet& x, const NormalizedSimplex& s, const MonotoneMap& f);
NormalizedSimplex face(const SimplicialSet& x, const NormalizedSimplex& s, int i);
NormalizedSimplex degeneracy(const SimplicialSet& x, const NormalizedSimplex& s, int i);

struct SimplicialOperator {
  enum class Kind { Face, Degeneracy };
  Kind kind;
  int index;
};

/// Applies the operators in order to a nondegenerate base and returns the
/// unique normal form. Throws std::out_of_range when an operator index does
/// not fit the current dimension.
NormalizedSimplex normalize_degenerate(const SimplicialSet& x, SimplexRef base,
                                       std::span<const SimplicialOperator> ops);

/// Every n-simplex, degenerate or not, in canonical order: by base dimension,
/// then base index, then degeneracy word in lexicographic order.
std::vector<NormalizedSimplex> all_simplices(const SimplicialSet& x, int n);

/// Levelwise product; nondegenerate simplices are the jointly nondegenerate
/// pairs. The result carries a ProductStructure.
std::shared_ptr<const SimplicialSet> product(std::shared_ptr<const SimplicialSet> x,
                                             std::shared_ptr<const SimplicialSet> y);

/// Representable Delta^n. Nondegenerate d-simplices are the (d+1)-subsets of
/// {0..n} in lexicographic order.
std::shared_ptr<const SimplicialSet> standard_simplex(int n, std::optional<int> dim_bound = {});

/// The strictly increasing vertex list of a nondegenerate simplex of Delta^n.
std::vector<int> standard_simplex_vertices(int n, SimplexRef ref);
SimplexRef standard_simplex_ref(int n, const std::vector<int>& vertices);

/// If x has the exact face structure of standard_simplex(n), returns n.
std::optional<int> representable_dimension(const SimplicialSet& x);

/// A small category given by a total composition table on composable pairs.
class FiniteCategory {
public:
  struct Morphism {
    std::string name;
    int source;
    int target;
  };

  /// compose maps (f, g) with target(f) == source(g) to g o f. Entries for
  /// identity factors are filled in automatically.
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<int> identities, std::map<std::pair<int, int>, int> compose);

  static FiniteCategory ordinal(int n);
  static FiniteCategory discrete(int k);
  /// One-object category of the cyclic group Z/k.
  static FiniteCategory cyclic_group(int k);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int identity(int object) const { return identities_.at(static_cast<std::size_t>(object)); }
  bool is_identity(int f) const;
  /// "f then g". Throws std::invalid_argument if not composable or missing.
  int compose(int f, int g) const;
  const std::map<std::pair<int, int>, int>& table() const { return compose_; }

  /// Checks composition closure, typing, identity laws and associativity.
  std::vector<std::string> validate() const;

private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::map<std::pair<int, int>, int> compose_;
};

/// Nondegenerate n-simplices are chains of n composable non-identity
/// morphisms; truncated at dim_bound.
std::shared_ptr<const SimplicialSet> nerve(const FiniteCategory& c, int dim_bound);

/// The chain of morphisms (or, in dimension 0, the single object) behind a
/// nondegenerate simplex of nerve(c, ...). Chains are listed in the same
/// order as the presentation.
std::vector<std::vector<int>> nerve_chains(const FiniteCategory& c, int n);

}  // namespace cutpoint
