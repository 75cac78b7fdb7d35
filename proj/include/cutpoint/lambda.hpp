#pragma once

// Connes' cyclic category in two independent encodings: morphisms as periodic
// monotone integer maps (CycMorphism), and finite presentations of
// Z+-categories truncated at a winding bound (ZPlusCategory).

#include "cutpoint/delta.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cutpoint {

inline constexpr int default_winding_bound = 3;
inline constexpr int default_hom_bound = 8;

/// A Z+-functor [m]_cyc -> [n]_cyc, encoded as a nondecreasing map phi on the
/// integers with phi(x + m + 1) = phi(x) + n + 1. Only phi(0..m) is stored,
/// normalized so that phi(0) lies in 0..n.
class CycMorphism {
public:
  /// Any representative; values[m] <= values[0] + n + 1 is required.
  CycMorphism(int m, int n, std::vector<int> values);
  static CycMorphism identity(int n);
  /// The generator x -> x - 1 of Aut([n]_cyc).
  static CycMorphism rotation(int n);
  static CycMorphism from_monotone(const MonotoneMap& f);

  int source() const { return m_; }
  int target() const { return n_; }
  const std::vector<int>& values() const { return values_; }
  /// phi(x) for any integer x.
  long operator()(long x) const;
  /// The object i of [m]_cyc goes to object_image(i) in [n]_cyc.
  int object_image(int i) const;
  /// True when phi restricted to 0..m is a monotone map [m] -> [n].
  bool is_simplicial() const;
  MonotoneMap as_monotone() const;

  friend bool operator==(const CycMorphism&, const CycMorphism&) = default;
  friend auto operator<=>(const CycMorphism&, const CycMorphism&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CycMorphism& f);

private:
  int m_;
  int n_;
  std::vector<int> values_;
};

/// g o f ("f then g"). Throws std::invalid_argument on mismatch.
CycMorphism compose_cyc(const CycMorphism& f, const CycMorphism& g);

/// tau^a for a in Z (negative powers allowed).
CycMorphism rotation_power(int n, long a);

/// Every morphism [m]_cyc -> [n]_cyc exactly once, in lexicographic order of
/// the canonical values. Throws std::out_of_range when m or n exceed bound.
std::vector<CycMorphism> enumerate_hom(int m, int n, int bound = default_hom_bound);
/// (m+n+1)! / (m! n!)
long hom_count(int m, int n);

/// psi = g o tau^a with g simplicial and 0 <= a <= m; unique.
struct CyclicFactorization {
  MonotoneMap simplicial;
  int rotation;
};
CyclicFactorization cyclic_factor(const CycMorphism& psi);

/// Raised when a computation needs a composite that lies beyond the winding
/// bound of a truncated presentation.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ZMorphism {
  std::string name;
  int source;
  int target;
  int winding;
};

/// Finite truncation of a Z+-category. Morphisms carry a claimed winding in
/// 0..winding_bound; the table holds g o f for the pair (f, g) ("f then g")
/// and is expected to list every composite that lies within the bound.
class ZPlusCategory {
public:
  using Table = std::map<std::pair<int, int>, int>;

  /// Throws std::invalid_argument on out-of-range indices or windings. Typing
  /// of the table is reported by problems(), not here.
  ZPlusCategory(std::vector<std::string> objects, std::vector<ZMorphism> morphisms, std::vector<int> identities,
                std::vector<int> units, Table compose, int winding_bound);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  int winding_bound() const { return bound_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ZMorphism>& morphisms() const { return morphisms_; }
  const ZMorphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  int identity(int x) const { return identities_.at(static_cast<std::size_t>(x)); }
  int unit(int x) const { return units_.at(static_cast<std::size_t>(x)); }
  const std::vector<int>& identities() const { return identities_; }
  const std::vector<int>& units() const { return units_; }
  const Table& table() const { return table_; }

  std::optional<int> compose(int f, int g) const;
  std::vector<int> hom(int x, int y) const;
  std::optional<int> find(int x, int y, int winding) const;

  /// Typing of identities, units and table entries; identity laws; unit
  /// centrality and associativity wherever the needed entries exist.
  std::vector<std::string> problems() const;

private:
  std::vector<std::string> objects_;
  std::vector<ZMorphism> morphisms_;
  std::vector<int> identities_;
  std::vector<int> units_;
  Table table_;
  int bound_;
  std::map<std::tuple<int, int, int>, int> by_grade_;
};

/// [n]_cyc truncated at the bound. Morphism (i, j, w) has length
/// ((j - i) mod (n+1)) + w (n+1) and is named "i->j/w".
ZPlusCategory cyc_object(int n, int winding_bound = default_winding_bound);
/// Length of a morphism of cyc_object(n, ...).
long cyc_length(const ZPlusCategory& c, int f);

/// Object and morphism maps; -1 marks a morphism whose image lies beyond
/// the target's truncation.
struct ZFunctor {
  std::vector<int> objects;
  std::vector<int> morphisms;
  friend bool operator==(const ZFunctor&, const ZFunctor&) = default;
  friend auto operator<=>(const ZFunctor&, const ZFunctor&) = default;
};

/// Every Z+-functor c -> d within the truncations, by backtracking. Throws
/// TruncationError if deciding a candidate needs a composite d does not list.
std::vector<ZFunctor> enumerate_zfunctors(const ZPlusCategory& c, const ZPlusCategory& d);

/// The functor of a CycMorphism between cyc_object(m, ...) and cyc_object(n, ...).
ZFunctor functor_of(const CycMorphism& phi, const ZPlusCategory& c, const ZPlusCategory& d);

/// Checks that f is a Z+-functor defined on every morphism.
bool is_zfunctor(const ZFunctor& f, const ZPlusCategory& c, const ZPlusCategory& d, std::string* why = nullptr);
/// Z+-functor that is bijective on objects and morphisms and whose table
/// images are exactly the target table.
bool is_isomorphism(const ZFunctor& f, const ZPlusCategory& c, const ZPlusCategory& d, std::string* why = nullptr);

struct ZPlusVerdict {
  bool ok = false;
  std::string reason;
  /// Objects of the offending full subcategory on failure.
  std::vector<int> counterexample;
  /// Recovered linear order, least element first, starting at object 0.
  std::vector<int> order;
  /// m(x, y) relative to base object 0.
  std::map<std::pair<int, int>, int> m;
  /// Isomorphism cyc_object(|order| - 1, W) -> C.
  ZFunctor certificate;
};

/// Decides whether C is Z+-isomorphic to A_cyc for a finite linear order A
/// by testing all one- and two-object full subcategories, then recovering A
/// from base object 0 and certifying the isomorphism on the whole table.
/// Throws TruncationError when the winding bound is below 2.
ZPlusVerdict check_zplus(const ZPlusCategory& c);

/// C* = Z+-functors C -> [0]_cyc with natural transformations.
struct DualPresentation {
  ZPlusCategory category;
  /// Object F: the length F(f) for every morphism f of C.
  std::vector<std::vector<int>> functors;
  /// Morphism eta: the component eta_x for every object x of C.
  std::vector<std::vector<int>> transformations;
};

/// Throws std::invalid_argument when check_zplus rejects c.
DualPresentation dualize(const ZPlusCategory& c, std::optional<int> winding_bound = {});

/// F_C : C -> C**, x -> evaluation at x and g -> (F -> F(g)).
ZFunctor double_dual_unit(const ZPlusCategory& c, const DualPresentation& dual, const DualPresentation& bidual);

/// Naturality of F against phi : [m]_cyc -> [n]_cyc at the given bound:
/// F_D o phi = phi** o F_C on every object and on every morphism whose
/// images stay inside the truncations.
bool unit_is_natural(const CycMorphism& phi, int winding_bound, std::string* why = nullptr);

}  // namespace cutpoint
