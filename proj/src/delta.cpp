#include "cutpoint/delta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cutpoint {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// a <= b pointwise
bool pointwise_le(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<std::vector<int>> sort_linear(std::vector<std::vector<int>> elems) {
  // A linear pointwise order on 0/1-vectors must agree with the count of ones.
  std::stable_sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) {
    return std::count(a.begin(), a.end(), 1) < std::count(b.begin(), b.end(), 1);
  });
  for (std::size_t i = 0; i + 1 < elems.size(); ++i)
    if (!pointwise_le(elems[i], elems[i + 1]) || elems[i] == elems[i + 1])
      throw std::logic_error("dual is not linearly ordered");
  return elems;
}

std::size_t index_of(const std::vector<std::vector<int>>& elems, const std::vector<int>& v) {
  const auto it = std::find(elems.begin(), elems.end(), v);
  if (it == elems.end()) throw std::logic_error("element missing from dual");
  return static_cast<std::size_t>(it - elems.begin());
}

}  // namespace

FiniteOrdinal::FiniteOrdinal(int n_) : n(n_) { require(n_ >= 0, "finite ordinal [n] needs n >= 0"); }

MonotoneMap::MonotoneMap(int source_n, int target_n, std::vector<int> values)
    : source_(source_n), target_(target_n), values_(std::move(values)) {
  require(source_ >= 0 && target_ >= 0, "monotone map between negative ordinals");
  require(static_cast<int>(values_.size()) == source_ + 1,
          "monotone map needs " + std::to_string(source_ + 1) + " values");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require(values_[i] >= 0 && values_[i] <= target_,
            "monotone map value " + std::to_string(values_[i]) + " outside [" +
                std::to_string(target_) + "]");
    if (i > 0) require(values_[i - 1] <= values_[i], "monotone map values must be nondecreasing");
  }
}

MonotoneMap::MonotoneMap(int target_n, std::vector<int> values)
    : MonotoneMap(static_cast<int>(values.size()) - 1, target_n, values) {}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  require(n >= 1 && i >= 0 && i <= n, "coface index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k)
    if (k != i) v.push_back(k);
  return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  require(n >= 0 && i >= 0 && i <= n, "codegeneracy index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
  return MonotoneMap(n + 1, n, std::move(v));
}

bool MonotoneMap::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] == values_[i]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  return values_.front() == 0 && values_.back() == target_ &&
         std::adjacent_find(values_.begin(), values_.end(),
                            [](int a, int b) { return b > a + 1; }) == values_.end();
}

std::ostream& operator<<(std::ostream& os, const MonotoneMap& f) {
  os << "(";
  for (std::size_t i = 0; i < f.values_.size(); ++i) os << (i ? "," : "") << f.values_[i];
  return os << "):[" << f.source_ << "]->[" << f.target_ << "]";
}

MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose_monotone: target [" + std::to_string(f.target()) +
                                "] does not match source [" + std::to_string(g.source()) + "]");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(f.source(), g.target(), std::move(v));
}

EpiMono epi_mono_factor(const MonotoneMap& f) {
  std::vector<int> image;
  std::vector<int> surj;
  for (int x : f.values()) {
    if (image.empty() || image.back() != x) image.push_back(x);
    surj.push_back(static_cast<int>(image.size()) - 1);
  }
  const int k = static_cast<int>(image.size()) - 1;
  return {MonotoneMap(f.source(), k, std::move(surj)), MonotoneMap(k, f.target(), std::move(image))};
}

std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(m, n, v);
    int i = m;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == n) --i;
    if (i < 0) break;
    const int next = v[static_cast<std::size_t>(i)] + 1;
    for (int k = i; k <= m; ++k) v[static_cast<std::size_t>(k)] = next;
  }
  return out;
}

BiPointedOrder::BiPointedOrder(int size_) : size(size_) {
  require(size_ >= 2, "bi-pointed order needs at least 2 elements, got " + std::to_string(size_));
}

IntervalMap::IntervalMap(int source_size, int target_size, std::vector<int> values)
    : source_(source_size), target_(target_size), values_(std::move(values)) {
  require(source_ >= 2 && target_ >= 2, "interval map between orders of size < 2");
  require(static_cast<int>(values_.size()) == source_, "interval map needs one value per element");
  require(values_.front() == 0 && values_.back() == target_ - 1,
          "interval map must preserve bottom and top");
  for (std::size_t i = 1; i < values_.size(); ++i)
    require(values_[i - 1] <= values_[i] && values_[i] < target_,
            "interval map values must be nondecreasing and in range");
}

IntervalMap IntervalMap::identity(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = i;
  return IntervalMap(size, size, std::move(v));
}

IntervalMap compose_interval(const IntervalMap& f, const IntervalMap& g) {
  require(f.target_size() == g.source_size(), "compose_interval: size mismatch");
  std::vector<int> v;
  for (int x : f.values()) v.push_back(g(x));
  return IntervalMap(f.source_size(), g.target_size(), std::move(v));
}

std::vector<std::vector<int>> dual_elements(FiniteOrdinal x) {
  std::vector<std::vector<int>> elems;
  for (const auto& h : all_monotone_maps(x.n, 1)) elems.push_back(h.values());
  return sort_linear(std::move(elems));
}

std::vector<std::vector<int>> dual_elements(BiPointedOrder j) {
  std::vector<std::vector<int>> elems;
  for (const auto& h : all_monotone_maps(j.size - 1, 1))
    if (h(0) == 0 && h(j.top()) == 1) elems.push_back(h.values());
  return sort_linear(std::move(elems));
}

BiPointedOrder interval_dual(FiniteOrdinal x) {
  return BiPointedOrder(static_cast<int>(dual_elements(x).size()));
}

FiniteOrdinal interval_dual(BiPointedOrder j) {
  return FiniteOrdinal(static_cast<int>(dual_elements(j).size()) - 1);
}

IntervalMap interval_dual(const MonotoneMap& f) {
  const auto src = dual_elements(FiniteOrdinal(f.target()));
  const auto tgt = dual_elements(FiniteOrdinal(f.source()));
  std::vector<int> v;
  for (const auto& h : src) {
    std::vector<int> hf;
    for (int x : f.values()) hf.push_back(h[static_cast<std::size_t>(x)]);
    v.push_back(static_cast<int>(index_of(tgt, hf)));
  }
  return IntervalMap(static_cast<int>(src.size()), static_cast<int>(tgt.size()), std::move(v));
}

MonotoneMap interval_dual(const IntervalMap& g) {
  const auto src = dual_elements(BiPointedOrder(g.target_size()));
  const auto tgt = dual_elements(BiPointedOrder(g.source_size()));
  std::vector<int> v;
  for (const auto& h : src) {
    std::vector<int> hg;
    for (int x : g.values()) hg.push_back(h[static_cast<std::size_t>(x)]);
    v.push_back(static_cast<int>(index_of(tgt, hg)));
  }
  return MonotoneMap(static_cast<int>(src.size()) - 1, static_cast<int>(tgt.size()) - 1,
                     std::move(v));
}

MonotoneMap ordinal_unit(FiniteOrdinal x) {
  const auto first = dual_elements(x);
  const auto second = dual_elements(BiPointedOrder(static_cast<int>(first.size())));
  std::vector<int> v;
  for (int i = 0; i <= x.n; ++i) {
    std::vector<int> ev;
    for (const auto& h : first) ev.push_back(h[static_cast<std::size_t>(i)]);
    v.push_back(static_cast<int>(index_of(second, ev)));
  }
  return MonotoneMap(x.n, static_cast<int>(second.size()) - 1, std::move(v));
}

IntervalMap interval_unit(BiPointedOrder j) {
  const auto first = dual_elements(j);
  const auto second = dual_elements(FiniteOrdinal(static_cast<int>(first.size()) - 1));
  std::vector<int> v;
  for (int i = 0; i < j.size; ++i) {
    std::vector<int> ev;
    for (const auto& h : first) ev.push_back(h[static_cast<std::size_t>(i)]);
    v.push_back(static_cast<int>(index_of(second, ev)));
  }
  return IntervalMap(j.size, static_cast<int>(second.size()), std::move(v));
}

}  // namespace cutpoint
