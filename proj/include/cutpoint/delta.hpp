#pragma once

// Simplex category Delta (finite ordinals [n] = {0..n}, monotone maps) and the
// interval category of bi-pointed finite orders, with the duality that sends
// [n] to Hom([n], {0,1}) and a bi-pointed J to its endpoint-preserving maps
// into {0,1}.

#include <compare>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace cutpoint {

struct FiniteOrdinal {
  int n = 0;

  explicit FiniteOrdinal(int n_);
  int size() const { return n + 1; }
  friend auto operator<=>(const FiniteOrdinal&, const FiniteOrdinal&) = default;
};

/// A nondecreasing map [source] -> [target], stored by its values.
class MonotoneMap {
public:
  MonotoneMap(int source_n, int target_n, std::vector<int> values);
  /// Source is inferred from the number of values.
  MonotoneMap(int target_n, std::vector<int> values);

  static MonotoneMap identity(int n);
  /// Coface delta_i : [n-1] -> [n], the injection skipping i.
  static MonotoneMap coface(int n, int i);
  /// Codegeneracy sigma_i : [n+1] -> [n], hitting i twice.
  static MonotoneMap codegeneracy(int n, int i);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const { return source_ == target_ && is_injective(); }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend std::ostream& operator<<(std::ostream& os, const MonotoneMap& f);

private:
  int source_;
  int target_;
  std::vector<int> values_;
};

/// The diagrammatic composite "f then g": result(i) = g(f(i)).
/// Throws std::invalid_argument when f.target() != g.source().
MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g);

struct EpiMono {
  MonotoneMap surjection;
  MonotoneMap injection;
};

/// Unique factorization f = injection o surjection.
EpiMono epi_mono_factor(const MonotoneMap& f);

/// All monotone maps [m] -> [n] in lexicographic order of values.
std::vector<MonotoneMap> all_monotone_maps(int m, int n);

/// Finite linear order with distinct bottom (index 0) and top (index size-1).
struct BiPointedOrder {
  int size = 2;

  explicit BiPointedOrder(int size_);
  int top() const { return size - 1; }
  friend auto operator<=>(const BiPointedOrder&, const BiPointedOrder&) = default;
};

/// Nondecreasing map between bi-pointed orders preserving bottom and top.
class IntervalMap {
public:
  IntervalMap(int source_size, int target_size, std::vector<int> values);

  static IntervalMap identity(int size);

  int source_size() const { return source_; }
  int target_size() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const IntervalMap&, const IntervalMap&) = default;

private:
  int source_;
  int target_;
  std::vector<int> values_;
};

IntervalMap compose_interval(const IntervalMap& f, const IntervalMap& g);

/// [n]^* = monotone maps [n] -> {0,1} under the pointwise order.
BiPointedOrder interval_dual(FiniteOrdinal x);
/// J^* = endpoint-preserving monotone maps J -> {0,1} under the pointwise order.
FiniteOrdinal interval_dual(BiPointedOrder j);

/// The elements of the dual, listed in increasing pointwise order. Each element
/// is the value vector of a map into {0,1}. The listing is computed by
/// enumeration and the order verified to be linear.
std::vector<std::vector<int>> dual_elements(FiniteOrdinal x);
std::vector<std::vector<int>> dual_elements(BiPointedOrder j);

/// f : [m] -> [n] induces f^* : [n]^* -> [m]^*, h |-> h o f.
IntervalMap interval_dual(const MonotoneMap& f);
/// g : J -> J' induces g^* : J'^* -> J^*, h |-> h o g.
MonotoneMap interval_dual(const IntervalMap& g);

/// Evaluation map [n] -> [n]^{**}, i |-> (h |-> h(i)).
MonotoneMap ordinal_unit(FiniteOrdinal x);
/// Evaluation map J -> J^{**}.
IntervalMap interval_unit(BiPointedOrder j);

}  // namespace cutpoint
