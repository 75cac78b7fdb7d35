#include "cutpoint/sset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cutpoint {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<int> word_of(const MonotoneMap& sigma) {
  std::vector<int> w;
  for (int j = 0; j < sigma.source(); ++j)
    if (sigma(j) == sigma(j + 1)) w.push_back(j);
  return w;
}

// X(g)(x) for a nondegenerate x and g : [k] -> [x.dim].
NormalizedSimplex act_nondegenerate(const SimplicialSet& x, SimplexRef base, const MonotoneMap& g) {
  const auto [eps, delta] = epi_mono_factor(g);
  if (delta.is_identity()) return NormalizedSimplex::from_surjection(base, eps);

  // delta = coface(i) o rest, with i the largest value missed by delta.
  int missing = delta.target();
  while (std::find(delta.values().begin(), delta.values().end(), missing) != delta.values().end())
    --missing;
  std::vector<int> rest;
  for (int v : delta.values()) rest.push_back(v < missing ? v : v - 1);
  const MonotoneMap rest_map(delta.source(), delta.target() - 1, std::move(rest));

  const NormalizedSimplex& y = x.face(base, missing);
  const NormalizedSimplex inner = act_nondegenerate(x, y.base(), compose_monotone(rest_map, y.surjection()));
  return NormalizedSimplex::from_surjection(inner.base(), compose_monotone(eps, inner.surjection()));
}

}  // namespace

NormalizedSimplex::NormalizedSimplex(SimplexRef base, std::vector<int> word)
    : base_(base), word_(std::move(word)) {
  if (base_.dim < 0 || base_.index < 0) throw std::invalid_argument("negative simplex reference");
  const int d = dim();
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] < 0 || word_[i] >= d)
      throw std::invalid_argument("degeneracy letter " + std::to_string(word_[i]) +
                                  " out of range for dimension " + std::to_string(d));
    if (i > 0 && word_[i - 1] >= word_[i])
      throw std::invalid_argument("degeneracy word must be strictly increasing");
  }
}

NormalizedSimplex NormalizedSimplex::from_surjection(SimplexRef base, const MonotoneMap& sigma) {
  if (!sigma.is_surjective() || sigma.target() != base.dim)
    throw std::invalid_argument("from_surjection needs a surjection onto the base dimension");
  return NormalizedSimplex(base, word_of(sigma));
}

MonotoneMap NormalizedSimplex::surjection() const {
  const int m = dim();
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  std::size_t w = 0;
  for (int j = 0; j < m; ++j) {
    const bool repeat = w < word_.size() && word_[w] == j;
    if (repeat) ++w;
    v[static_cast<std::size_t>(j) + 1] = v[static_cast<std::size_t>(j)] + (repeat ? 0 : 1);
  }
  return MonotoneMap(m, base_.dim, std::move(v));
}

std::string to_string(const NormalizedSimplex& s) {
  std::ostringstream os;
  os << "[" << s.base().dim << "," << s.base().index << "]";
  if (!s.word().empty()) {
    os << "s";
    for (std::size_t i = 0; i < s.word().size(); ++i) os << (i ? "," : "[") << s.word()[i];
    os << "]";
  }
  return os.str();
}

SimplicialSet::SimplicialSet(int dim_bound, std::vector<std::vector<std::string>> labels, FaceTable faces)
    : dim_bound_(dim_bound), labels_(std::move(labels)), faces_(std::move(faces)) {
  if (dim_bound_ < 0) throw std::invalid_argument("dim_bound must be non-negative");
  if (labels_.size() < static_cast<std::size_t>(dim_bound_) + 1) labels_.resize(static_cast<std::size_t>(dim_bound_) + 1);
  if (faces_.size() < labels_.size()) faces_.resize(labels_.size());
}

int SimplicialSet::top_dimension() const {
  for (int d = static_cast<int>(labels_.size()) - 1; d >= 0; --d)
    if (!labels_[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

int SimplicialSet::count_nondegenerate(int n) const {
  if (n < 0 || n > dim_bound_)
    throw std::out_of_range("dimension " + std::to_string(n) + " outside 0.." + std::to_string(dim_bound_));
  return static_cast<std::size_t>(n) < labels_.size() ? static_cast<int>(labels_[static_cast<std::size_t>(n)].size()) : 0;
}

bool SimplicialSet::contains(SimplexRef ref) const {
  return ref.dim >= 0 && static_cast<std::size_t>(ref.dim) < labels_.size() && ref.index >= 0 &&
         static_cast<std::size_t>(ref.index) < labels_[static_cast<std::size_t>(ref.dim)].size();
}

const std::string& SimplicialSet::label(SimplexRef ref) const {
  if (!contains(ref)) throw std::out_of_range("no simplex [" + std::to_string(ref.dim) + "," + std::to_string(ref.index) + "]");
  return labels_[static_cast<std::size_t>(ref.dim)][static_cast<std::size_t>(ref.index)];
}

const NormalizedSimplex& SimplicialSet::face(SimplexRef ref, int i) const {
  if (!contains(ref) || ref.dim == 0 || i < 0 || i > ref.dim)
    throw std::out_of_range("face d_" + std::to_string(i) + " of [" + std::to_string(ref.dim) + "," +
                            std::to_string(ref.index) + "] does not exist");
  return faces_.at(static_cast<std::size_t>(ref.dim)).at(static_cast<std::size_t>(ref.index)).at(static_cast<std::size_t>(i));
}

std::optional<SimplexRef> SimplicialSet::find(int dim, const std::string& label) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= labels_.size()) return std::nullopt;
  const auto& row = labels_[static_cast<std::size_t>(dim)];
  const auto it = std::find(row.begin(), row.end(), label);
  if (it == row.end()) return std::nullopt;
  return SimplexRef{dim, static_cast<int>(it - row.begin())};
}

ValidationReport validate(const SimplicialSet& x) {
  ValidationReport report;
  auto fail = [&](std::string identity, SimplexRef s, std::string detail) {
    report.violations.push_back({std::move(identity), s, std::move(detail)});
  };

  for (std::size_t d = static_cast<std::size_t>(x.dim_bound()) + 1; d < x.labels().size(); ++d)
    if (!x.labels()[d].empty()) fail("dim_bound", {static_cast<int>(d), 0}, "simplices above dim_bound");
  if (!report.ok()) return report;

  for (int d = 1; d <= x.top_dimension(); ++d) {
    const auto& row = x.faces().size() > static_cast<std::size_t>(d) ? x.faces()[static_cast<std::size_t>(d)]
                                                                        : SimplicialSet::FaceTable::value_type{};
    for (int k = 0; k < x.count_nondegenerate(d); ++k) {
      const SimplexRef s{d, k};
      if (static_cast<std::size_t>(k) >= row.size() || row[static_cast<std::size_t>(k)].size() != static_cast<std::size_t>(d) + 1) {
        fail("face count", s, "simplex needs " + std::to_string(d + 1) + " faces");
        continue;
      }
      for (int i = 0; i <= d; ++i) {
        const NormalizedSimplex& f = row[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        if (f.dim() != d - 1)
          fail("face dimension", s, "d_" + std::to_string(i) + " has dimension " + std::to_string(f.dim()));
        else if (!x.contains(f.base()))
          fail("face reference", s, "d_" + std::to_string(i) + " points at missing simplex " + to_string(f));
      }
    }
  }
  if (!report.ok()) return report;

  for (int d = 2; d <= x.top_dimension(); ++d) {
    for (int k = 0; k < x.count_nondegenerate(d); ++k) {
      const NormalizedSimplex s(SimplexRef{d, k});
      for (int j = 1; j <= d; ++j)
        for (int i = 0; i < j; ++i) {
          const auto lhs = face(x, face(x, s, j), i);
          const auto rhs = face(x, face(x, s, i), j - 1);
          if (lhs != rhs)
            fail("d_" + std::to_string(i) + " d_" + std::to_string(j) + " = d_" + std::to_string(j - 1) +
                     " d_" + std::to_string(i),
                 s.base(), to_string(lhs) + " != " + to_string(rhs));
        }
    }
  }
  return report;
}

NormalizedSimplex act(const SimplicialSet& x, const NormalizedSimplex& s, const MonotoneMap& f) {
  if (f.target() != s.dim())
    throw std::invalid_argument("act: map targets [" + std::to_string(f.target()) + "] but simplex has dimension " +
                                std::to_string(s.dim()));
  if (!x.contains(s.base())) throw std::out_of_range("act: unknown simplex " + to_string(s));
  return act_nondegenerate(x, s.base(), compose_monotone(f, s.surjection()));
}

NormalizedSimplex face(const SimplicialSet& x, const NormalizedSimplex& s, int i) {
  if (s.dim() == 0 || i < 0 || i > s.dim())
    throw std::out_of_range("face d_" + std::to_string(i) + " undefined in dimension " + std::to_string(s.dim()));
  return act(x, s, MonotoneMap::coface(s.dim(), i));
}

NormalizedSimplex degeneracy(const SimplicialSet& x, const NormalizedSimplex& s, int i) {
  if (i < 0 || i > s.dim())
    throw std::out_of_range("degeneracy s_" + std::to_string(i) + " undefined in dimension " + std::to_string(s.dim()));
  return act(x, s, MonotoneMap::codegeneracy(s.dim(), i));
}

NormalizedSimplex normalize_degenerate(const SimplicialSet& x, SimplexRef base,
                                       std::span<const SimplicialOperator> ops) {
  if (!x.contains(base)) throw std::out_of_range("normalize_degenerate: unknown base simplex");
  NormalizedSimplex s(base);
  for (const auto& op : ops)
    s = op.kind == SimplicialOperator::Kind::Face ? face(x, s, op.index) : degeneracy(x, s, op.index);
  return s;
}

std::vector<NormalizedSimplex> all_simplices(const SimplicialSet& x, int n) {
  std::vector<NormalizedSimplex> out;
  for (int d = 0; d <= std::min(n, x.top_dimension()); ++d)
    for (int k = 0; k < x.count_nondegenerate(d); ++k)
      for (auto& word : combinations(n, n - d)) out.emplace_back(SimplexRef{d, k}, std::move(word));
  return out;
}

namespace {

// Removes the letters shared by the two words and re-indexes the rest.
NormalizedSimplex drop_letters(const NormalizedSimplex& s, const std::vector<int>& common) {
  std::vector<int> w;
  for (int l : s.word()) {
    if (std::binary_search(common.begin(), common.end(), l)) continue;
    const auto shift = std::lower_bound(common.begin(), common.end(), l) - common.begin();
    w.push_back(l - static_cast<int>(shift));
  }
  return NormalizedSimplex(s.base(), std::move(w));
}

std::string pair_label(const SimplicialSet& x, const NormalizedSimplex& a, const SimplicialSet& y,
                       const NormalizedSimplex& b) {
  auto part = [](const SimplicialSet& z, const NormalizedSimplex& s) {
    std::string out = z.label(s.base());
    if (!s.word().empty()) {
      out += "*s";
      for (std::size_t i = 0; i < s.word().size(); ++i) out += (i ? "," : "") + std::to_string(s.word()[i]);
    }
    return out;
  };
  return "(" + part(x, a) + " ; " + part(y, b) + ")";
}

}  // namespace

std::shared_ptr<const SimplicialSet> product(std::shared_ptr<const SimplicialSet> x,
                                             std::shared_ptr<const SimplicialSet> y) {
  const int top = std::max(0, x->top_dimension()) + std::max(0, y->top_dimension());
  auto info = std::make_shared<ProductStructure>();
  info->left = x;
  info->right = y;
  info->pairs.resize(static_cast<std::size_t>(top) + 1);

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    const auto xs = all_simplices(*x, n);
    const auto ys = all_simplices(*y, n);
    for (const auto& a : xs)
      for (const auto& b : ys) {
        std::vector<int> common;
        std::set_intersection(a.word().begin(), a.word().end(), b.word().begin(), b.word().end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;
        const SimplexRef ref{n, static_cast<int>(info->pairs[static_cast<std::size_t>(n)].size())};
        info->pairs[static_cast<std::size_t>(n)].emplace_back(a, b);
        info->lookup.emplace(std::make_pair(a, b), ref);
        labels[static_cast<std::size_t>(n)].push_back(pair_label(*x, a, *y, b));
      }
  }

  SimplicialSet::FaceTable faces(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    for (const auto& [a, b] : info->pairs[static_cast<std::size_t>(n)]) {
      std::vector<NormalizedSimplex> row;
      for (int i = 0; i <= n; ++i) {
        const auto fa = face(*x, a, i);
        const auto fb = face(*y, b, i);
        std::vector<int> common;
        std::set_intersection(fa.word().begin(), fa.word().end(), fb.word().begin(), fb.word().end(),
                              std::back_inserter(common));
        const SimplexRef base = info->lookup.at({drop_letters(fa, common), drop_letters(fb, common)});
        row.emplace_back(base, common);
      }
      faces[static_cast<std::size_t>(n)].push_back(std::move(row));
    }
  }

  auto result = std::make_shared<SimplicialSet>(top, std::move(labels), std::move(faces));
  result->attach_product(std::move(info));
  return result;
}

std::vector<int> standard_simplex_vertices(int n, SimplexRef ref) {
  const auto subsets = combinations(n + 1, ref.dim + 1);
  if (ref.index < 0 || static_cast<std::size_t>(ref.index) >= subsets.size())
    throw std::out_of_range("no such simplex of Delta^" + std::to_string(n));
  return subsets[static_cast<std::size_t>(ref.index)];
}

SimplexRef standard_simplex_ref(int n, const std::vector<int>& vertices) {
  const int d = static_cast<int>(vertices.size()) - 1;
  const auto subsets = combinations(n + 1, d + 1);
  const auto it = std::find(subsets.begin(), subsets.end(), vertices);
  if (it == subsets.end()) throw std::invalid_argument("not a strictly increasing vertex list of Delta^" + std::to_string(n));
  return {d, static_cast<int>(it - subsets.begin())};
}

std::shared_ptr<const SimplicialSet> standard_simplex(int n, std::optional<int> dim_bound) {
  if (n < 0) throw std::invalid_argument("standard_simplex needs n >= 0");
  const int bound = dim_bound.value_or(n);
  if (bound < n) throw std::invalid_argument("dim_bound below the top dimension");
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n) + 1);
  SimplicialSet::FaceTable faces(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    for (const auto& verts : combinations(n + 1, d + 1)) {
      std::string l = "<";
      for (std::size_t i = 0; i < verts.size(); ++i) l += (i ? "," : "") + std::to_string(verts[i]);
      labels[static_cast<std::size_t>(d)].push_back(l + ">");
      if (d == 0) continue;
      std::vector<NormalizedSimplex> row;
      for (int i = 0; i <= d; ++i) {
        auto rest = verts;
        rest.erase(rest.begin() + i);
        row.emplace_back(standard_simplex_ref(n, rest));
      }
      faces[static_cast<std::size_t>(d)].push_back(std::move(row));
    }
  }
  return std::make_shared<SimplicialSet>(bound, std::move(labels), std::move(faces));
}

std::optional<int> representable_dimension(const SimplicialSet& x) {
  const int n = x.top_dimension();
  if (n < 0) return std::nullopt;
  const auto model = standard_simplex(n);
  for (int d = 0; d <= n; ++d) {
    if (x.count_nondegenerate(d) != model->count_nondegenerate(d)) return std::nullopt;
    if (d == 0) continue;
    for (int k = 0; k < x.count_nondegenerate(d); ++k)
      for (int i = 0; i <= d; ++i)
        if (x.face({d, k}, i) != model->face({d, k}, i)) return std::nullopt;
  }
  return n;
}

// ---------------------------------------------------------------------------

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identities, std::map<std::pair<int, int>, int> compose)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      compose_(std::move(compose)) {
  if (identities_.size() != objects_.size()) throw std::invalid_argument("one identity per object required");
  for (const auto& m : morphisms_)
    if (m.source < 0 || m.target < 0 || m.source >= object_count() || m.target >= object_count())
      throw std::invalid_argument("morphism '" + m.name + "' has an unknown endpoint");
  for (std::size_t o = 0; o < identities_.size(); ++o) {
    const int id = identities_[o];
    if (id < 0 || id >= morphism_count() || morphisms_[static_cast<std::size_t>(id)].source != static_cast<int>(o) ||
        morphisms_[static_cast<std::size_t>(id)].target != static_cast<int>(o))
      throw std::invalid_argument("identity of object '" + objects_[o] + "' is not an endomorphism of it");
  }
  for (int f = 0; f < morphism_count(); ++f) {
    compose_.try_emplace({identity(morphisms_[static_cast<std::size_t>(f)].source), f}, f);
    compose_.try_emplace({f, identity(morphisms_[static_cast<std::size_t>(f)].target)}, f);
  }
}

FiniteCategory FiniteCategory::ordinal(int n) {
  std::vector<std::string> objs;
  for (int i = 0; i <= n; ++i) objs.push_back(std::to_string(i));
  std::vector<Morphism> ms;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      index[{i, j}] = static_cast<int>(ms.size());
      ms.push_back({std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
  std::vector<int> ids;
  for (int i = 0; i <= n; ++i) ids.push_back(index.at({i, i}));
  std::map<std::pair<int, int>, int> table;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) table[{index.at({i, j}), index.at({j, k})}] = index.at({i, k});
  return FiniteCategory(std::move(objs), std::move(ms), std::move(ids), std::move(table));
}

FiniteCategory FiniteCategory::discrete(int k) {
  std::vector<std::string> objs;
  std::vector<Morphism> ms;
  std::vector<int> ids;
  for (int i = 0; i < k; ++i) {
    objs.push_back("x" + std::to_string(i));
    ids.push_back(i);
    ms.push_back({"id_x" + std::to_string(i), i, i});
  }
  return FiniteCategory(std::move(objs), std::move(ms), std::move(ids), {});
}

FiniteCategory FiniteCategory::cyclic_group(int k) {
  if (k < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<Morphism> ms;
  for (int i = 0; i < k; ++i) ms.push_back({i == 0 ? "e" : "g" + std::to_string(i), 0, 0});
  std::map<std::pair<int, int>, int> table;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) table[{a, b}] = (a + b) % k;
  return FiniteCategory({"*"}, std::move(ms), {0}, std::move(table));
}

bool FiniteCategory::is_identity(int f) const {
  return std::find(identities_.begin(), identities_.end(), f) != identities_.end();
}

int FiniteCategory::compose(int f, int g) const {
  if (morphism(f).target != morphism(g).source)
    throw std::invalid_argument("cannot compose '" + morphism(f).name + "' then '" + morphism(g).name + "'");
  const auto it = compose_.find({f, g});
  if (it == compose_.end())
    throw std::invalid_argument("composition table lacks '" + morphism(f).name + "' then '" + morphism(g).name + "'");
  return it->second;
}

std::vector<std::string> FiniteCategory::validate() const {
  std::vector<std::string> problems;
  for (const auto& [key, h] : compose_) {
    const auto [f, g] = key;
    if (f < 0 || g < 0 || h < 0 || f >= morphism_count() || g >= morphism_count() || h >= morphism_count()) {
      problems.push_back("composition entry refers to an unknown morphism");
      continue;
    }
    if (morphism(f).target != morphism(g).source)
      problems.push_back("entry for non-composable pair '" + morphism(f).name + "','" + morphism(g).name + "'");
    else if (morphism(h).source != morphism(f).source || morphism(h).target != morphism(g).target)
      problems.push_back("'" + morphism(g).name + " o " + morphism(f).name + "' has wrong endpoints");
  }
  if (!problems.empty()) return problems;
  for (int f = 0; f < morphism_count(); ++f)
    for (int g = 0; g < morphism_count(); ++g)
      if (morphism(f).target == morphism(g).source && !compose_.count({f, g}))
        problems.push_back("missing composite of '" + morphism(f).name + "' then '" + morphism(g).name + "'");
  if (!problems.empty()) return problems;
  for (int f = 0; f < morphism_count(); ++f)
    for (int g = 0; g < morphism_count(); ++g) {
      if (morphism(f).target != morphism(g).source) continue;
      for (int h = 0; h < morphism_count(); ++h) {
        if (morphism(g).target != morphism(h).source) continue;
        if (compose(compose(f, g), h) != compose(f, compose(g, h)))
          problems.push_back("associativity fails on '" + morphism(f).name + "','" + morphism(g).name + "','" +
                             morphism(h).name + "'");
      }
    }
  return problems;
}

std::vector<std::vector<int>> nerve_chains(const FiniteCategory& c, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    for (int o = 0; o < c.object_count(); ++o) out.push_back({o});
    return out;
  }
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int at) {
    if (static_cast<int>(chain.size()) == n) {
      out.push_back(chain);
      return;
    }
    for (int f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f) || (at >= 0 && c.morphism(f).source != at)) continue;
      chain.push_back(f);
      extend(c.morphism(f).target);
      chain.pop_back();
    }
  };
  extend(-1);
  return out;
}

std::shared_ptr<const SimplicialSet> nerve(const FiniteCategory& c, int dim_bound) {
  if (dim_bound < 0) throw std::invalid_argument("dim_bound must be non-negative");
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::map<std::vector<int>, int>> index;
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n <= dim_bound; ++n) {
    chains.push_back(nerve_chains(c, n));
    if (chains.back().empty()) {
      chains.pop_back();
      break;
    }
    index.emplace_back();
    labels.emplace_back();
    for (const auto& ch : chains.back()) {
      index.back().emplace(ch, static_cast<int>(index.back().size()));
      std::string l;
      if (n == 0) {
        l = c.objects()[static_cast<std::size_t>(ch[0])];
      } else {
        for (std::size_t i = 0; i < ch.size(); ++i) l += (i ? "|" : "") + c.morphism(ch[i]).name;
      }
      labels.back().push_back(l);
    }
  }

  // Normal form of an arbitrary chain of n links with vertex objects.
  auto normalize = [&](const std::vector<int>& links, int first_object) {
    std::vector<int> base;
    std::vector<int> word;
    for (std::size_t t = 0; t < links.size(); ++t) {
      if (c.is_identity(links[t]))
        word.push_back(static_cast<int>(t));
      else
        base.push_back(links[t]);
    }
    const int d = static_cast<int>(base.size());
    const int idx = d == 0 ? index[0].at({first_object}) : index[static_cast<std::size_t>(d)].at(base);
    return NormalizedSimplex(SimplexRef{d, idx}, std::move(word));
  };

  SimplicialSet::FaceTable faces(chains.size());
  for (std::size_t n = 1; n < chains.size(); ++n) {
    for (const auto& ch : chains[n]) {
      std::vector<NormalizedSimplex> row;
      const int nn = static_cast<int>(n);
      for (int i = 0; i <= nn; ++i) {
        std::vector<int> links;
        int first = c.morphism(ch.front()).source;
        if (i == 0) {
          links.assign(ch.begin() + 1, ch.end());
          first = c.morphism(ch.front()).target;
        } else if (i == nn) {
          links.assign(ch.begin(), ch.end() - 1);
        } else {
          for (int t = 0; t < nn; ++t) {
            if (t == i - 1) {
              links.push_back(c.compose(ch[static_cast<std::size_t>(t)], ch[static_cast<std::size_t>(t) + 1]));
              ++t;
            } else {
              links.push_back(ch[static_cast<std::size_t>(t)]);
            }
          }
        }
        row.push_back(normalize(links, first));
      }
      faces[n].push_back(std::move(row));
    }
  }
  return std::make_shared<SimplicialSet>(dim_bound, std::move(labels), std::move(faces));
}

}  // namespace cutpoint
