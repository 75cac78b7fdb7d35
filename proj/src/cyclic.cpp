#include "cutpoint/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cutpoint {

namespace {

std::string ref_text(const NormalizedSimplex& s) { return to_string(s); }

// Orders the base's simplices and checks the shape of a tau table.
void check_tau_shape(const SimplicialSet& base, const std::vector<std::vector<int>>& tau,
                     std::vector<std::vector<NormalizedSimplex>>& all) {
  if (static_cast<int>(tau.size()) != base.dim_bound() + 1)
    throw std::invalid_argument("tau needs one row per dimension 0.." + std::to_string(base.dim_bound()));
  for (int n = 0; n <= base.dim_bound(); ++n) {
    all.push_back(all_simplices(base, n));
    const auto& row = tau[static_cast<std::size_t>(n)];
    if (row.size() != all.back().size())
      throw std::invalid_argument("tau[" + std::to_string(n) + "] has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(all.back().size()));
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] < 0 || row[k] >= static_cast<int>(row.size()))
        throw std::invalid_argument("tau[" + std::to_string(n) + "][" + std::to_string(k) + "] out of range");
  }
}

}  // namespace

CyclicSet::CyclicSet(std::shared_ptr<const SimplicialSet> base, std::vector<std::vector<int>> tau)
    : base_(std::move(base)), tau_(std::move(tau)) {
  if (!base_) throw std::invalid_argument("cyclic set needs an underlying simplicial set");
  check_tau_shape(*base_, tau_, all_);
  for (const auto& row : all_) {
    index_.emplace_back();
    for (std::size_t k = 0; k < row.size(); ++k) index_.back().emplace(row[k], static_cast<int>(k));
  }
}

const std::vector<NormalizedSimplex>& CyclicSet::simplices(int n) const {
  if (n < 0 || n > dim_bound()) throw std::out_of_range("dimension " + std::to_string(n) + " beyond bound");
  return all_[static_cast<std::size_t>(n)];
}

int CyclicSet::index_of(const NormalizedSimplex& s) const {
  if (s.dim() < 0 || s.dim() > dim_bound()) throw std::out_of_range("dimension beyond bound");
  const auto& idx = index_[static_cast<std::size_t>(s.dim())];
  auto it = idx.find(s);
  if (it == idx.end()) throw std::out_of_range("unknown simplex " + ref_text(s));
  return it->second;
}

NormalizedSimplex CyclicSet::tau(const NormalizedSimplex& s) const {
  const int k = index_of(s);
  const auto n = static_cast<std::size_t>(s.dim());
  return all_[n][static_cast<std::size_t>(tau_[n][static_cast<std::size_t>(k)])];
}

NormalizedSimplex CyclicSet::tau_power(const NormalizedSimplex& s, long a) const {
  const long period = s.dim() + 1;
  long r = ((a % period) + period) % period;
  NormalizedSimplex out = s;
  while (r-- > 0) out = tau(out);
  return out;
}

ValidationReport validate_cyclic(const CyclicSet& x) {
  ValidationReport report;
  const SimplicialSet& base = *x.base();
  auto fail = [&](std::string identity, const NormalizedSimplex& s, std::string detail) {
    report.violations.push_back({std::move(identity), s.base(), ref_text(s) + ": " + std::move(detail)});
  };

  for (int n = 0; n <= x.dim_bound(); ++n) {
    const auto& row = x.tau_table()[static_cast<std::size_t>(n)];
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != static_cast<int>(k)) {
        fail("t bijective", x.simplices(n)[k], "t_" + std::to_string(n) + " is not a permutation");
        break;
      }
    for (const auto& s : x.simplices(n)) {
      if (x.tau_power(s, n + 1) != s) fail("t^{n+1} = id", s, "order of t does not divide n+1");
      const NormalizedSimplex ts = x.tau(s);
      if (n >= 1) {
        if (face(base, ts, 0) != face(base, s, n)) fail("d_0 t = d_n", s, "");
        for (int i = 1; i <= n; ++i)
          if (face(base, ts, i) != x.tau(face(base, s, i - 1)))
            fail("d_" + std::to_string(i) + " t = t d_" + std::to_string(i - 1), s, "");
      }
      if (n + 1 <= x.dim_bound()) {
        if (degeneracy(base, ts, 0) != x.tau_power(degeneracy(base, s, n), 2)) fail("s_0 t = t^2 s_n", s, "");
        for (int i = 1; i <= n; ++i)
          if (degeneracy(base, ts, i) != x.tau(degeneracy(base, s, i - 1)))
            fail("s_" + std::to_string(i) + " t = t s_" + std::to_string(i - 1), s, "");
      }
    }
  }
  return report;
}

NormalizedSimplex act_cyclic(const CyclicSet& x, const NormalizedSimplex& s, const CycMorphism& psi) {
  if (psi.target() != s.dim()) throw std::invalid_argument("morphism target does not match simplex dimension");
  const auto f = cyclic_factor(psi);
  return x.tau_power(act(*x.base(), s, f.simplicial), f.rotation);
}

std::shared_ptr<const SimplicialSet> underlying_simplicial(const CyclicSet& x) { return x.base(); }

std::vector<int> CyclicNerve::expand(const NormalizedSimplex& s) const {
  const auto& b = s.base();
  const auto& w = words.at(static_cast<std::size_t>(b.dim)).at(static_cast<std::size_t>(b.index));
  const MonotoneMap sigma = s.surjection();
  std::vector<int> out;
  for (int x = 0; x < s.dim(); ++x) {
    const int at = sigma(x);
    if (sigma(x + 1) == at)
      out.push_back(category.identity(category.morphism(w[static_cast<std::size_t>(at)]).source));
    else
      out.push_back(w[static_cast<std::size_t>(at)]);
  }
  out.push_back(w.back());
  return out;
}

NormalizedSimplex CyclicNerve::normalize(const std::vector<int>& word) const {
  if (word.empty()) throw std::invalid_argument("empty cyclic word");
  const int k = static_cast<int>(word.size()) - 1;
  for (int i = 0; i <= k; ++i) {
    const int next = word[static_cast<std::size_t>((i + 1) % (k + 1))];
    if (category.morphism(word[static_cast<std::size_t>(i)]).target != category.morphism(next).source)
      throw std::invalid_argument("cyclic word is not composable at link " + std::to_string(i));
  }
  std::vector<int> base;
  std::vector<int> letters;
  for (int j = 0; j < k; ++j) {
    if (category.is_identity(word[static_cast<std::size_t>(j)]))
      letters.push_back(j);
    else
      base.push_back(word[static_cast<std::size_t>(j)]);
  }
  base.push_back(word.back());
  const auto d = base.size() - 1;
  if (d >= lookup.size()) throw std::out_of_range("word dimension beyond bound");
  return NormalizedSimplex(SimplexRef{static_cast<int>(d), lookup[d].at(base)}, std::move(letters));
}

CyclicNerve cyclic_nerve(const FiniteCategory& c, int dim_bound) {
  if (dim_bound < 0) throw std::invalid_argument("dim_bound must be non-negative");
  CyclicNerve out{c, nullptr, {}, {}};
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n <= dim_bound; ++n) {
    out.words.emplace_back();
    if (n == 0) {
      for (int f = 0; f < c.morphism_count(); ++f)
        if (c.morphism(f).source == c.morphism(f).target) out.words.back().push_back({f});
    } else {
      for (auto chain : nerve_chains(c, n)) {
        const int from = c.morphism(chain.back()).target;
        const int to = c.morphism(chain.front()).source;
        for (int g = 0; g < c.morphism_count(); ++g) {
          if (c.morphism(g).source != from || c.morphism(g).target != to) continue;
          chain.push_back(g);
          out.words.back().push_back(chain);
          chain.pop_back();
        }
      }
    }
    out.lookup.emplace_back();
    labels.emplace_back();
    for (const auto& w : out.words.back()) {
      out.lookup.back().emplace(w, static_cast<int>(out.lookup.back().size()));
      std::string l;
      for (std::size_t i = 0; i < w.size(); ++i) l += (i ? "|" : "") + c.morphism(w[i]).name;
      labels.back().push_back(l);
    }
  }

  SimplicialSet::FaceTable faces(static_cast<std::size_t>(dim_bound) + 1);
  for (int n = 1; n <= dim_bound; ++n) {
    for (const auto& w : out.words[static_cast<std::size_t>(n)]) {
      std::vector<NormalizedSimplex> row;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        if (i == 0) {
          f.assign(w.begin() + 1, w.end() - 1);
          f.push_back(c.compose(w.back(), w.front()));
        } else {
          f.assign(w.begin(), w.begin() + (i - 1));
          f.push_back(c.compose(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]));
          f.insert(f.end(), w.begin() + (i + 1), w.end());
        }
        row.push_back(out.normalize(f));
      }
      faces[static_cast<std::size_t>(n)].push_back(std::move(row));
    }
  }
  auto base = std::make_shared<const SimplicialSet>(dim_bound, std::move(labels), std::move(faces));

  std::vector<std::vector<int>> tau;
  for (int n = 0; n <= dim_bound; ++n) {
    tau.emplace_back();
    const auto all = all_simplices(*base, n);
    std::map<NormalizedSimplex, int> pos;
    for (std::size_t k = 0; k < all.size(); ++k) pos.emplace(all[k], static_cast<int>(k));
    for (const auto& s : all) {
      auto w = out.expand(s);
      std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
      tau.back().push_back(pos.at(out.normalize(w)));
    }
  }
  out.set = std::make_shared<const CyclicSet>(base, std::move(tau));
  return out;
}

NormalizedSimplex CyclicRepresentable::encode(const CycMorphism& psi) const {
  if (psi.target() != n) throw std::invalid_argument("morphism does not land in [" + std::to_string(n) + "]");
  const auto& v = psi.values();
  std::vector<int> letters;
  std::vector<int> base{v.front()};
  for (int j = 0; j < psi.source(); ++j) {
    if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j) + 1])
      letters.push_back(j);
    else
      base.push_back(v[static_cast<std::size_t>(j) + 1]);
  }
  const int d = static_cast<int>(base.size()) - 1;
  const CycMorphism key(d, n, std::move(base));
  const auto& row = nondegenerate.at(static_cast<std::size_t>(d));
  auto it = std::lower_bound(row.begin(), row.end(), key);
  if (it == row.end() || *it != key) throw std::logic_error("nondegenerate morphism missing from listing");
  return NormalizedSimplex(SimplexRef{d, static_cast<int>(it - row.begin())}, std::move(letters));
}

CycMorphism CyclicRepresentable::decode(const NormalizedSimplex& s) const {
  const auto& b = nondegenerate.at(static_cast<std::size_t>(s.base().dim)).at(static_cast<std::size_t>(s.base().index));
  const MonotoneMap sigma = s.surjection();
  std::vector<int> v;
  for (int x = 0; x <= s.dim(); ++x) v.push_back(b.values()[static_cast<std::size_t>(sigma(x))]);
  return CycMorphism(s.dim(), n, std::move(v));
}

CyclicRepresentable representable_cyclic(int n, int dim_bound) {
  if (n < 0 || dim_bound < 0) throw std::invalid_argument("negative dimension");
  CyclicRepresentable out{n, nullptr, {}};
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= dim_bound; ++k) {
    out.nondegenerate.emplace_back();
    labels.emplace_back();
    if (k > n + 1) continue;
    for (const auto& f : enumerate_hom(k, n, std::max(default_hom_bound, std::max(k, n)))) {
      const auto& v = f.values();
      if (std::adjacent_find(v.begin(), v.end(), std::greater_equal<int>()) != v.end()) continue;
      out.nondegenerate.back().push_back(f);
      std::string l;
      for (std::size_t i = 0; i < v.size(); ++i) l += (i ? "," : "") + std::to_string(v[i]);
      labels.back().push_back(l);
    }
  }

  SimplicialSet::FaceTable faces(static_cast<std::size_t>(dim_bound) + 1);
  for (int k = 1; k <= dim_bound; ++k)
    for (const auto& f : out.nondegenerate[static_cast<std::size_t>(k)]) {
      std::vector<NormalizedSimplex> row;
      for (int i = 0; i <= k; ++i)
        row.push_back(out.encode(compose_cyc(CycMorphism::from_monotone(MonotoneMap::coface(k, i)), f)));
      faces[static_cast<std::size_t>(k)].push_back(std::move(row));
    }
  auto base = std::make_shared<const SimplicialSet>(dim_bound, std::move(labels), std::move(faces));

  std::vector<std::vector<int>> tau;
  for (int k = 0; k <= dim_bound; ++k) {
    tau.emplace_back();
    const auto all = all_simplices(*base, k);
    std::map<NormalizedSimplex, int> pos;
    for (std::size_t i = 0; i < all.size(); ++i) pos.emplace(all[i], static_cast<int>(i));
    for (const auto& s : all)
      tau.back().push_back(pos.at(out.encode(compose_cyc(CycMorphism::rotation(k), out.decode(s)))));
  }
  out.set = std::make_shared<const CyclicSet>(base, std::move(tau));
  return out;
}

ZPlusCategory ord_to_cyc(const std::vector<std::string>& order, int winding_bound) {
  if (order.empty()) throw std::invalid_argument("empty linear order");
  if (winding_bound < 1) throw std::invalid_argument("winding bound must be at least 1");
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("linear order lists an element twice");
  }
  const int size = static_cast<int>(order.size());
  const int w1 = winding_bound + 1;
  auto index = [&](int i, int j, int w) { return (i * size + j) * w1 + w; };
  // Length in the Z+-structure: an arrow of A climbs j - i steps, its star
  // closes the remaining size - (j - i), and 1 adds a full turn.
  auto length = [&](int i, int j, int w) { return (j >= i ? j - i : size - (i - j)) + w * size; };

  std::vector<ZMorphism> morphisms;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int w = 0; w <= winding_bound; ++w) {
        const auto& a = order[static_cast<std::size_t>(i)];
        const auto& b = order[static_cast<std::size_t>(j)];
        std::string name;
        int turns = w;
        if (i < j) {
          name = a + "<" + b;
        } else if (i > j) {
          name = "(" + b + "<" + a + ")*";
        } else if (w == 0) {
          name = "id_" + a;
        } else {
          name = "(id_" + a + ")*";
          turns = w - 1;
        }
        if (turns > 0) name += " 1^" + std::to_string(turns);
        morphisms.push_back({name, i, j, w});
      }

  ZPlusCategory::Table table;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        for (int w = 0; w <= winding_bound; ++w)
          for (int v = 0; v <= winding_bound; ++v) {
            const int total = length(i, j, w) + length(j, k, v);
            const int base = length(i, k, 0);
            const int turns = (total - base) / size;
            if (turns <= winding_bound) table[{index(i, j, w), index(j, k, v)}] = index(i, k, turns);
          }

  std::vector<std::string> objects = order;
  std::vector<int> identities;
  std::vector<int> units;
  for (int i = 0; i < size; ++i) {
    identities.push_back(index(i, i, 0));
    units.push_back(index(i, i, 1));
  }
  return ZPlusCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(units),
                       std::move(table), winding_bound);
}

bool is_functor(const FiniteCategory& c, const FiniteCategory& d, const CategoryFunctor& f) {
  if (static_cast<int>(f.objects.size()) != c.object_count()) return false;
  if (static_cast<int>(f.morphisms.size()) != c.morphism_count()) return false;
  for (int o : f.objects)
    if (o < 0 || o >= d.object_count()) return false;
  for (int g = 0; g < c.morphism_count(); ++g) {
    const int h = f.morphisms[static_cast<std::size_t>(g)];
    if (h < 0 || h >= d.morphism_count()) return false;
    if (d.morphism(h).source != f.objects[static_cast<std::size_t>(c.morphism(g).source)]) return false;
    if (d.morphism(h).target != f.objects[static_cast<std::size_t>(c.morphism(g).target)]) return false;
  }
  for (int o = 0; o < c.object_count(); ++o)
    if (f.morphisms[static_cast<std::size_t>(c.identity(o))] != d.identity(f.objects[static_cast<std::size_t>(o)]))
      return false;
  for (const auto& [pair, h] : c.table())
    if (d.compose(f.morphisms[static_cast<std::size_t>(pair.first)], f.morphisms[static_cast<std::size_t>(pair.second)]) !=
        f.morphisms[static_cast<std::size_t>(h)])
      return false;
  return true;
}

NormalizedSimplex map_cyclic_nerve(const CyclicNerve& from, const CyclicNerve& to, const CategoryFunctor& f,
                                   const NormalizedSimplex& s) {
  auto w = from.expand(s);
  for (int& g : w) g = f.morphisms.at(static_cast<std::size_t>(g));
  return to.normalize(w);
}

}  // namespace cutpoint
