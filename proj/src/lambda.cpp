#include "cutpoint/lambda.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace cutpoint {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod(long a, long b) { return a - floor_div(a, b) * b; }

std::string fmt_objects(const ZPlusCategory& c, const std::vector<int>& objs) {
  std::string s = "{";
  for (std::size_t i = 0; i < objs.size(); ++i)
    s += (i ? "," : "") + c.objects()[static_cast<std::size_t>(objs[i])];
  return s + "}";
}

}  // namespace

CycMorphism::CycMorphism(int m, int n, std::vector<int> values) : m_(m), n_(n), values_(std::move(values)) {
  require(m_ >= 0 && n_ >= 0, "cyclic morphism between negative objects");
  require(static_cast<int>(values_.size()) == m_ + 1, "cyclic morphism needs " + std::to_string(m_ + 1) + " values");
  for (std::size_t i = 1; i < values_.size(); ++i)
    require(values_[i - 1] <= values_[i], "cyclic morphism values must be nondecreasing");
  require(values_.back() <= values_.front() + n_ + 1, "cyclic morphism values must span at most one period");
  const long shift = floor_div(values_.front(), n_ + 1) * (n_ + 1);
  for (auto& v : values_) v -= static_cast<int>(shift);
}

CycMorphism CycMorphism::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  return CycMorphism(n, n, std::move(v));
}

CycMorphism CycMorphism::rotation(int n) { return rotation_power(n, 1); }

CycMorphism CycMorphism::from_monotone(const MonotoneMap& f) { return CycMorphism(f.source(), f.target(), f.values()); }

long CycMorphism::operator()(long x) const {
  const long q = floor_div(x, m_ + 1);
  return values_[static_cast<std::size_t>(x - q * (m_ + 1))] + q * (n_ + 1);
}

int CycMorphism::object_image(int i) const { return static_cast<int>(mod((*this)(i), n_ + 1)); }

bool CycMorphism::is_simplicial() const { return values_.back() <= n_; }

MonotoneMap CycMorphism::as_monotone() const {
  if (!is_simplicial()) throw std::invalid_argument("cyclic morphism is not simplicial");
  return MonotoneMap(m_, n_, values_);
}

std::ostream& operator<<(std::ostream& os, const CycMorphism& f) {
  os << "(";
  for (std::size_t i = 0; i < f.values_.size(); ++i) os << (i ? "," : "") << f.values_[i];
  return os << "):[" << f.m_ << "]->[" << f.n_ << "]";
}

CycMorphism compose_cyc(const CycMorphism& f, const CycMorphism& g) {
  if (f.target() != g.source())
    throw std::invalid_argument("compose_cyc: target [" + std::to_string(f.target()) + "] does not match source [" +
                                std::to_string(g.source()) + "]");
  std::vector<int> v;
  for (int i = 0; i <= f.source(); ++i) v.push_back(static_cast<int>(g(f(i))));
  return CycMorphism(f.source(), g.target(), std::move(v));
}

CycMorphism rotation_power(int n, long a) {
  std::vector<int> v;
  const long shift = mod(a, n + 1);
  for (int x = 0; x <= n; ++x) v.push_back(static_cast<int>(x - shift));
  return CycMorphism(n, n, std::move(v));
}

std::vector<CycMorphism> enumerate_hom(int m, int n, int bound) {
  if (m < 0 || n < 0 || m > bound || n > bound)
    throw std::out_of_range("enumerate_hom: sizes must lie in 0.." + std::to_string(bound));
  std::vector<CycMorphism> out;
  for (int start = 0; start <= n; ++start)
    for (const auto& offsets : all_monotone_maps(m, n + 1)) {
      if (offsets(0) != 0) break;
      std::vector<int> v;
      for (int d : offsets.values()) v.push_back(start + d);
      out.emplace_back(m, n, std::move(v));
    }
  return out;
}

long hom_count(int m, int n) {
  long c = 1;
  for (int i = 1; i <= m; ++i) c = c * (n + 1 + i) / i;
  return c * (n + 1);
}

CyclicFactorization cyclic_factor(const CycMorphism& psi) {
  const int m = psi.source();
  const int n = psi.target();
  for (int a = 0; a <= m; ++a) {
    const long base = floor_div(psi(a), n + 1) * (n + 1);
    if (psi(a + m) - base > n) continue;
    std::vector<int> v;
    for (int x = 0; x <= m; ++x) v.push_back(static_cast<int>(psi(x + a) - base));
    return {MonotoneMap(m, n, std::move(v)), a};
  }
  throw std::logic_error("cyclic morphism has no simplicial factorization");
}

ZPlusCategory::ZPlusCategory(std::vector<std::string> objects, std::vector<ZMorphism> morphisms,
                             std::vector<int> identities, std::vector<int> units, Table compose, int winding_bound)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      units_(std::move(units)),
      table_(std::move(compose)),
      bound_(winding_bound) {
  require(!objects_.empty(), "Z+-category needs at least one object");
  require(bound_ >= 1, "winding bound must be at least 1");
  const int no = object_count();
  const int nm = morphism_count();
  for (std::size_t f = 0; f < morphisms_.size(); ++f) {
    const auto& mo = morphisms_[f];
    require(mo.source >= 0 && mo.source < no && mo.target >= 0 && mo.target < no,
            "morphism '" + mo.name + "' has an unknown endpoint");
    require(mo.winding >= 0 && mo.winding <= bound_,
            "morphism '" + mo.name + "' has winding outside 0.." + std::to_string(bound_));
    by_grade_.try_emplace({mo.source, mo.target, mo.winding}, static_cast<int>(f));
  }
  require(identities_.size() == objects_.size(), "one identity per object required");
  require(units_.size() == objects_.size(), "one unit per object required");
  auto in_range = [nm](int f) { return f >= 0 && f < nm; };
  for (int f : identities_) require(in_range(f), "identity refers to an unknown morphism");
  for (int f : units_) require(in_range(f), "unit refers to an unknown morphism");
  for (const auto& [fg, h] : table_)
    require(in_range(fg.first) && in_range(fg.second) && in_range(h), "composition entry refers to an unknown morphism");
}

std::optional<int> ZPlusCategory::compose(int f, int g) const {
  const auto it = table_.find({f, g});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> ZPlusCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < morphism_count(); ++f)
    if (morphisms_[static_cast<std::size_t>(f)].source == x && morphisms_[static_cast<std::size_t>(f)].target == y)
      out.push_back(f);
  return out;
}

std::optional<int> ZPlusCategory::find(int x, int y, int winding) const {
  const auto it = by_grade_.find({x, y, winding});
  if (it == by_grade_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> ZPlusCategory::problems() const {
  std::vector<std::string> out;
  auto name = [&](int f) { return "'" + morphism(f).name + "'"; };
  for (int x = 0; x < object_count(); ++x) {
    const auto& id = morphism(identity(x));
    if (id.source != x || id.target != x || id.winding != 0)
      out.push_back("identity of " + objects_[static_cast<std::size_t>(x)] + " is not a winding-0 endomorphism");
    const auto& u = morphism(unit(x));
    if (u.source != x || u.target != x || u.winding != 1)
      out.push_back("unit of " + objects_[static_cast<std::size_t>(x)] + " is not a winding-1 endomorphism");
  }
  for (const auto& [fg, h] : table_) {
    const auto& f = morphism(fg.first);
    const auto& g = morphism(fg.second);
    const auto& k = morphism(h);
    if (f.target != g.source || k.source != f.source || k.target != g.target)
      out.push_back("composite of " + name(fg.first) + " then " + name(fg.second) + " is mistyped");
  }
  if (!out.empty()) return out;

  for (int f = 0; f < morphism_count(); ++f) {
    const auto& mo = morphism(f);
    if (compose(identity(mo.source), f) != f || compose(f, identity(mo.target)) != f)
      out.push_back("identity law fails for " + name(f));
    if (mo.winding < bound_) {
      const auto a = compose(unit(mo.source), f);
      const auto b = compose(f, unit(mo.target));
      if (!a || !b || *a != *b) out.push_back("unit is not central against " + name(f));
    }
  }
  for (const auto& [fg, fg_h] : table_)
    for (auto it = table_.lower_bound({fg.second, -1}); it != table_.end() && it->first.first == fg.second; ++it) {
      const int h = it->first.second;
      const auto left = compose(fg_h, h);
      const auto right = compose(fg.first, it->second);
      if (left != right)
        out.push_back("associativity fails for " + name(fg.first) + ", " + name(fg.second) + ", " + name(h));
    }
  return out;
}

ZPlusCategory cyc_object(int n, int winding_bound) {
  require(n >= 0, "[n]_cyc needs n >= 0");
  const int N = n + 1;
  const int W = winding_bound;
  std::vector<std::string> objects;
  for (int i = 0; i < N; ++i) objects.push_back(std::to_string(i));
  std::vector<ZMorphism> morphisms;
  auto index = [&](int i, int j, int w) { return (i * N + j) * (W + 1) + w; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int w = 0; w <= W; ++w)
        morphisms.push_back({std::to_string(i) + "->" + std::to_string(j) + "/" + std::to_string(w), i, j, w});
  std::vector<int> ids;
  std::vector<int> units;
  for (int i = 0; i < N; ++i) {
    ids.push_back(index(i, i, 0));
    units.push_back(index(i, i, 1));
  }
  ZPlusCategory::Table table;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int w1 = 0; w1 <= W; ++w1)
          for (int w2 = 0; w2 <= W; ++w2) {
            const long len = mod(j - i, N) + w1 * N + mod(k - j, N) + w2 * N;
            const long w3 = (len - mod(k - i, N)) / N;
            if (w3 <= W) table[{index(i, j, w1), index(j, k, w2)}] = index(i, k, static_cast<int>(w3));
          }
  return ZPlusCategory(std::move(objects), std::move(morphisms), std::move(ids), std::move(units), std::move(table), W);
}

long cyc_length(const ZPlusCategory& c, int f) {
  const auto& mo = c.morphism(f);
  const int N = c.object_count();
  return mod(mo.target - mo.source, N) + static_cast<long>(mo.winding) * N;
}

std::vector<ZFunctor> enumerate_zfunctors(const ZPlusCategory& c, const ZPlusCategory& d) {
  if (d.winding_bound() < c.winding_bound() + 1)
    throw TruncationError("enumerate_zfunctors: target winding bound " + std::to_string(d.winding_bound()) +
                          " cannot hold images of source windings up to " + std::to_string(c.winding_bound()) +
                          "; it must be at least " + std::to_string(c.winding_bound() + 1));
  std::vector<std::tuple<int, int, int>> entries;
  for (const auto& [fg, h] : c.table()) entries.emplace_back(fg.first, fg.second, h);

  std::vector<int> order(static_cast<std::size_t>(c.morphism_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.morphism(a).winding < c.morphism(b).winding; });

  std::vector<ZFunctor> out;
  ZFunctor cur{std::vector<int>(static_cast<std::size_t>(c.object_count()), -1),
               std::vector<int>(static_cast<std::size_t>(c.morphism_count()), -1)};

  auto typed = [&](const ZFunctor& F, int f, int img) {
    const auto& a = c.morphism(f);
    const auto& b = d.morphism(img);
    return b.source == F.objects[static_cast<std::size_t>(a.source)] &&
           b.target == F.objects[static_cast<std::size_t>(a.target)];
  };
  // Forces table consequences; false on contradiction.
  auto propagate = [&](ZFunctor& F) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [f, g, h] : entries) {
        const int ff = F.morphisms[static_cast<std::size_t>(f)];
        const int gg = F.morphisms[static_cast<std::size_t>(g)];
        if (ff < 0 || gg < 0) continue;
        const auto r = d.compose(ff, gg);
        if (!r) return false;
        int& hh = F.morphisms[static_cast<std::size_t>(h)];
        if (hh >= 0) {
          if (hh != *r) return false;
        } else {
          if (!typed(F, h, *r)) return false;
          hh = *r;
          changed = true;
        }
      }
    }
    return true;
  };

  std::function<void(ZFunctor, std::size_t)> assign_morphisms = [&](ZFunctor F, std::size_t pos) {
    while (pos < order.size() && F.morphisms[static_cast<std::size_t>(order[pos])] >= 0) ++pos;
    if (pos == order.size()) {
      out.push_back(std::move(F));
      return;
    }
    const int f = order[pos];
    const auto& mo = c.morphism(f);
    for (int img : d.hom(F.objects[static_cast<std::size_t>(mo.source)], F.objects[static_cast<std::size_t>(mo.target)])) {
      ZFunctor G = F;
      G.morphisms[static_cast<std::size_t>(f)] = img;
      if (propagate(G)) assign_morphisms(std::move(G), pos + 1);
    }
  };

  std::function<void(std::size_t)> assign_objects = [&](std::size_t x) {
    if (x == cur.objects.size()) {
      ZFunctor F = cur;
      for (int o = 0; o < c.object_count(); ++o) {
        const int img = F.objects[static_cast<std::size_t>(o)];
        for (const auto& [from, to] : {std::pair{c.identity(o), d.identity(img)}, std::pair{c.unit(o), d.unit(img)}}) {
          int& slot = F.morphisms[static_cast<std::size_t>(from)];
          if (slot >= 0 && slot != to) return;
          if (!typed(F, from, to)) return;
          slot = to;
        }
      }
      if (propagate(F)) assign_morphisms(std::move(F), 0);
      return;
    }
    for (int y = 0; y < d.object_count(); ++y) {
      cur.objects[x] = y;
      assign_objects(x + 1);
    }
  };
  assign_objects(0);
  std::sort(out.begin(), out.end());
  return out;
}

ZFunctor functor_of(const CycMorphism& phi, const ZPlusCategory& c, const ZPlusCategory& d) {
  require(c.object_count() == phi.source() + 1 && d.object_count() == phi.target() + 1,
          "functor_of: presentations do not match the morphism's source and target");
  const int N = d.object_count();
  ZFunctor F;
  for (int i = 0; i < c.object_count(); ++i) F.objects.push_back(phi.object_image(i));
  for (int f = 0; f < c.morphism_count(); ++f) {
    const auto& mo = c.morphism(f);
    const long len = phi(mo.source + cyc_length(c, f)) - phi(mo.source);
    const int s = F.objects[static_cast<std::size_t>(mo.source)];
    const int t = F.objects[static_cast<std::size_t>(mo.target)];
    const long w = (len - mod(t - s, N)) / N;
    const auto img = w <= d.winding_bound() ? d.find(s, t, static_cast<int>(w)) : std::nullopt;
    F.morphisms.push_back(img ? *img : -1);
  }
  return F;
}

bool is_zfunctor(const ZFunctor& F, const ZPlusCategory& c, const ZPlusCategory& d, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (static_cast<int>(F.objects.size()) != c.object_count() || static_cast<int>(F.morphisms.size()) != c.morphism_count())
    return fail("functor has the wrong number of object or morphism images");
  for (int x : F.objects)
    if (x < 0 || x >= d.object_count()) return fail("object image out of range");
  for (int f = 0; f < c.morphism_count(); ++f) {
    const int img = F.morphisms[static_cast<std::size_t>(f)];
    if (img < 0 || img >= d.morphism_count()) return fail("morphism '" + c.morphism(f).name + "' has no image");
    const auto& a = c.morphism(f);
    const auto& b = d.morphism(img);
    if (b.source != F.objects[static_cast<std::size_t>(a.source)] || b.target != F.objects[static_cast<std::size_t>(a.target)])
      return fail("image of '" + a.name + "' is mistyped");
  }
  for (int x = 0; x < c.object_count(); ++x) {
    const int y = F.objects[static_cast<std::size_t>(x)];
    if (F.morphisms[static_cast<std::size_t>(c.identity(x))] != d.identity(y))
      return fail("identity of " + c.objects()[static_cast<std::size_t>(x)] + " is not preserved");
    if (F.morphisms[static_cast<std::size_t>(c.unit(x))] != d.unit(y))
      return fail("unit of " + c.objects()[static_cast<std::size_t>(x)] + " is not preserved");
  }
  for (const auto& [fg, h] : c.table()) {
    const auto r = d.compose(F.morphisms[static_cast<std::size_t>(fg.first)], F.morphisms[static_cast<std::size_t>(fg.second)]);
    if (r != F.morphisms[static_cast<std::size_t>(h)])
      return fail("composite of '" + c.morphism(fg.first).name + "' then '" + c.morphism(fg.second).name +
                  "' is not preserved");
  }
  return true;
}

bool is_isomorphism(const ZFunctor& F, const ZPlusCategory& c, const ZPlusCategory& d, std::string* why) {
  if (!is_zfunctor(F, c, d, why)) return false;
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count())
    return fail("sizes differ");
  if (std::set<int>(F.objects.begin(), F.objects.end()).size() != F.objects.size())
    return fail("object map is not injective");
  std::vector<int> pre(static_cast<std::size_t>(d.morphism_count()), -1);
  for (int f = 0; f < c.morphism_count(); ++f) {
    int& slot = pre[static_cast<std::size_t>(F.morphisms[static_cast<std::size_t>(f)])];
    if (slot >= 0) return fail("morphism map is not injective");
    slot = f;
  }
  for (const auto& [fg, h] : d.table()) {
    const auto r = c.compose(pre[static_cast<std::size_t>(fg.first)], pre[static_cast<std::size_t>(fg.second)]);
    if (r != pre[static_cast<std::size_t>(h)])
      return fail("target composite of '" + d.morphism(fg.first).name + "' then '" + d.morphism(fg.second).name +
                  "' has no matching source composite");
  }
  return true;
}

namespace {

// Matches the full subcategory of c on objs against model, object r of the
// model going to objs[r] and morphisms matched by winding.
std::optional<ZFunctor> match_model(const ZPlusCategory& model, const ZPlusCategory& c, const std::vector<int>& objs,
                                    std::string& why) {
  const int W = c.winding_bound();
  const std::set<int> in(objs.begin(), objs.end());
  for (int x : objs)
    for (int y : objs) {
      std::vector<int> seen(static_cast<std::size_t>(W) + 1, 0);
      for (int f : c.hom(x, y)) ++seen[static_cast<std::size_t>(c.morphism(f).winding)];
      for (int w = 0; w <= W; ++w)
        if (seen[static_cast<std::size_t>(w)] != 1) {
          why = "Hom(" + c.objects()[static_cast<std::size_t>(x)] + "," + c.objects()[static_cast<std::size_t>(y)] +
                ") has " + std::to_string(seen[static_cast<std::size_t>(w)]) + " morphisms of winding " +
                std::to_string(w) + " instead of 1";
          return std::nullopt;
        }
    }
  ZFunctor F{objs, {}};
  for (int f = 0; f < model.morphism_count(); ++f) {
    const auto& mo = model.morphism(f);
    F.morphisms.push_back(*c.find(objs[static_cast<std::size_t>(mo.source)], objs[static_cast<std::size_t>(mo.target)], mo.winding));
  }
  if (!is_zfunctor(F, model, c, &why)) return std::nullopt;
  std::map<int, int> pre;
  for (int f = 0; f < model.morphism_count(); ++f) pre[F.morphisms[static_cast<std::size_t>(f)]] = f;
  for (const auto& [fg, h] : c.table()) {
    if (!pre.count(fg.first) || !pre.count(fg.second)) continue;
    const auto r = model.compose(pre[fg.first], pre[fg.second]);
    if (!r || !pre.count(h) || *r != pre[h]) {
      why = "composite of '" + c.morphism(fg.first).name + "' then '" + c.morphism(fg.second).name +
            "' is not the expected one";
      return std::nullopt;
    }
  }
  return F;
}

}  // namespace

ZPlusVerdict check_zplus(const ZPlusCategory& c) {
  const int W = c.winding_bound();
  if (W < 2)
    throw TruncationError("check_zplus needs winding bound at least 2, got " + std::to_string(W));
  ZPlusVerdict v;
  auto fail = [&](std::string reason, std::vector<int> objs) {
    v.reason = std::move(reason);
    v.counterexample = std::move(objs);
    return v;
  };
  if (const auto probs = c.problems(); !probs.empty()) return fail(probs.front(), {});

  std::string why;
  const auto point = cyc_object(0, W);
  for (int x = 0; x < c.object_count(); ++x)
    if (!match_model(point, c, {x}, why)) return fail("End(" + c.objects()[static_cast<std::size_t>(x)] + ") is not [0]_cyc: " + why, {x});
  const auto edge = cyc_object(1, W);
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = x + 1; y < c.object_count(); ++y)
      if (!match_model(edge, c, {x, y}, why)) return fail("full subcategory " + fmt_objects(c, {x, y}) + " is not [1]_cyc: " + why, {x, y});

  // f_xy is the winding-0 morphism; f_xy f_cx = f_cy 1^m(x,y) with c = object 0.
  const int n = c.object_count();
  auto f = [&](int x, int y) { return *c.find(x, y, 0); };
  auto winding_of = [&](int a, int b, const std::vector<int>& objs) -> std::optional<int> {
    const auto r = c.compose(a, b);
    if (!r) {
      fail("composite missing within the winding bound", objs);
      return std::nullopt;
    }
    return c.morphism(*r).winding;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto m = winding_of(f(0, x), f(x, y), {0, x, y});
      if (!m) return v;
      v.m[{x, y}] = *m;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x != y && v.m[{x, y}] + v.m[{y, x}] != 1)
        return fail("m(x,y) + m(y,x) != 1 for " + fmt_objects(c, {x, y}), {x, y});
      for (int z = 0; z < n; ++z) {
        const auto k = winding_of(f(x, y), f(y, z), {x, y, z});
        if (!k) return v;
        if (v.m[{x, y}] + v.m[{y, z}] != v.m[{x, z}] + *k)
          return fail("winding cocycle fails for " + fmt_objects(c, {x, y, z}), {x, y, z});
      }
    }

  std::vector<int> preds(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && v.m[{y, x}] == 0) ++preds[static_cast<std::size_t>(x)];
  v.order.resize(static_cast<std::size_t>(n));
  std::iota(v.order.begin(), v.order.end(), 0);
  std::sort(v.order.begin(), v.order.end(), [&](int a, int b) { return preds[static_cast<std::size_t>(a)] < preds[static_cast<std::size_t>(b)]; });
  for (int r = 0; r < n; ++r)
    if (preds[static_cast<std::size_t>(v.order[static_cast<std::size_t>(r)])] != r)
      return fail("relation m(x,y) = 0 is not a linear order", v.order);

  const auto model = cyc_object(n - 1, W);
  const auto cert = match_model(model, c, v.order, why);
  if (!cert) return fail("no isomorphism with [" + std::to_string(n - 1) + "]_cyc: " + why, v.order);
  if (!is_isomorphism(*cert, model, c, &why)) return fail("certificate rejected: " + why, v.order);
  v.certificate = *cert;
  v.ok = true;
  return v;
}

DualPresentation dualize(const ZPlusCategory& c, std::optional<int> winding_bound) {
  const int W = winding_bound.value_or(c.winding_bound());
  const auto verdict = check_zplus(c);
  if (!verdict.ok) throw std::invalid_argument("dualize: input is not isomorphic to any [n]_cyc: " + verdict.reason);
  const int n = c.object_count();
  const auto target = cyc_object(0, c.winding_bound() + 1);

  std::vector<std::vector<int>> functors;
  for (const auto& F : enumerate_zfunctors(c, target)) {
    std::vector<int> len;
    for (int img : F.morphisms) len.push_back(target.morphism(img).winding);
    functors.push_back(std::move(len));
  }
  // Weight of F on each unit step of the recovered cycle.
  auto weights = [&](const std::vector<int>& F) {
    std::vector<int> w;
    for (int r = 0; r < n; ++r) {
      const int a = verdict.order[static_cast<std::size_t>(r)];
      const int b = verdict.order[static_cast<std::size_t>((r + 1) % n)];
      w.push_back(F[static_cast<std::size_t>(n == 1 ? c.unit(a) : *c.find(a, b, 0))]);
    }
    return w;
  };
  std::sort(functors.begin(), functors.end(), [&](const auto& a, const auto& b) { return weights(a) > weights(b); });

  std::vector<std::string> labels;
  for (const auto& F : functors) {
    std::string s = "w(";
    const auto w = weights(F);
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    labels.push_back(s + ")");
  }

  const int k = static_cast<int>(functors.size());
  auto components = [&](int a, int b, int base) -> std::optional<std::vector<int>> {
    const auto& F = functors[static_cast<std::size_t>(a)];
    const auto& G = functors[static_cast<std::size_t>(b)];
    std::vector<int> eta;
    for (int x = 0; x < n; ++x) {
      const int f0x = *c.find(0, x, 0);
      eta.push_back(base + G[static_cast<std::size_t>(f0x)] - F[static_cast<std::size_t>(f0x)]);
      if (eta.back() < 0) return std::nullopt;
    }
    for (int f = 0; f < c.morphism_count(); ++f) {
      const auto& mo = c.morphism(f);
      if (G[static_cast<std::size_t>(f)] + eta[static_cast<std::size_t>(mo.source)] !=
          eta[static_cast<std::size_t>(mo.target)] + F[static_cast<std::size_t>(f)])
        return std::nullopt;
    }
    return eta;
  };

  std::vector<ZMorphism> morphisms;
  std::vector<std::vector<int>> transformations;
  std::map<std::pair<int, int>, int> least;
  std::map<std::tuple<int, int, int>, int> index;
  const int search_limit = 2 * (c.winding_bound() + 2) + n;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::optional<std::vector<int>> eta;
      int base = 0;
      for (; base <= search_limit && !eta; ++base) eta = components(a, b, base);
      if (!eta) throw std::logic_error("dualize: no natural transformation between dual objects");
      least[{a, b}] = base - 1;
      for (int w = 0; w <= W; ++w) {
        std::vector<int> comp = *eta;
        for (auto& x : comp) x += w;
        index[{a, b, w}] = static_cast<int>(morphisms.size());
        morphisms.push_back({labels[static_cast<std::size_t>(a)] + "=>" + labels[static_cast<std::size_t>(b)] + "/" + std::to_string(w), a, b, w});
        transformations.push_back(std::move(comp));
      }
    }
  ZPlusCategory::Table table;
  for (int e1 = 0; e1 < static_cast<int>(morphisms.size()); ++e1)
    for (int e2 = 0; e2 < static_cast<int>(morphisms.size()); ++e2) {
      const auto& m1 = morphisms[static_cast<std::size_t>(e1)];
      const auto& m2 = morphisms[static_cast<std::size_t>(e2)];
      if (m1.target != m2.source) continue;
      const int total = transformations[static_cast<std::size_t>(e1)][0] + transformations[static_cast<std::size_t>(e2)][0];
      const int w = total - least[{m1.source, m2.target}];
      if (w <= W) table[{e1, e2}] = index[{m1.source, m2.target, w}];
    }
  std::vector<int> ids;
  std::vector<int> units;
  for (int a = 0; a < k; ++a) {
    ids.push_back(index[{a, a, 0}]);
    units.push_back(index[{a, a, 1}]);
  }
  return {ZPlusCategory(std::move(labels), std::move(morphisms), std::move(ids), std::move(units), std::move(table), W),
          std::move(functors), std::move(transformations)};
}

ZFunctor double_dual_unit(const ZPlusCategory& c, const DualPresentation& dual, const DualPresentation& bidual) {
  ZFunctor F;
  const int nd = dual.category.morphism_count();
  for (int x = 0; x < c.object_count(); ++x) {
    int found = -1;
    for (int k = 0; k < bidual.category.object_count(); ++k) {
      bool match = true;
      for (int eta = 0; eta < nd && match; ++eta)
        match = bidual.functors[static_cast<std::size_t>(k)][static_cast<std::size_t>(eta)] ==
                dual.transformations[static_cast<std::size_t>(eta)][static_cast<std::size_t>(x)];
      if (match) found = k;
    }
    if (found < 0) throw std::logic_error("evaluation functor missing from the double dual");
    F.objects.push_back(found);
  }
  for (int g = 0; g < c.morphism_count(); ++g) {
    const auto& mo = c.morphism(g);
    int found = -1;
    for (int t = 0; t < bidual.category.morphism_count() && found < 0; ++t) {
      const auto& bt = bidual.category.morphism(t);
      if (bt.source != F.objects[static_cast<std::size_t>(mo.source)] || bt.target != F.objects[static_cast<std::size_t>(mo.target)])
        continue;
      bool match = true;
      for (int a = 0; a < dual.category.object_count() && match; ++a)
        match = bidual.transformations[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)] ==
                dual.functors[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)];
      if (match) found = t;
    }
    F.morphisms.push_back(found);
  }
  return F;
}

bool unit_is_natural(const CycMorphism& phi, int W, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const auto C = cyc_object(phi.source(), W);
  const auto D = cyc_object(phi.target(), W);
  const auto Phi = functor_of(phi, C, D);
  const auto Cs = dualize(C);
  const auto Css = dualize(Cs.category);
  const auto Ds = dualize(D);
  const auto Dss = dualize(Ds.category);
  const auto FC = double_dual_unit(C, Cs, Css);
  const auto FD = double_dual_unit(D, Ds, Dss);

  // phi* : D* -> C*, G -> G o phi.
  std::vector<int> star_obj;
  for (const auto& G : Ds.functors) {
    int found = -1;
    for (int a = 0; a < Cs.category.object_count(); ++a) {
      bool match = true;
      for (int f = 0; f < C.morphism_count() && match; ++f) {
        const int img = Phi.morphisms[static_cast<std::size_t>(f)];
        if (img >= 0) match = Cs.functors[static_cast<std::size_t>(a)][static_cast<std::size_t>(f)] == G[static_cast<std::size_t>(img)];
      }
      if (match) {
        if (found >= 0) return fail("pullback of a dual object is ambiguous");
        found = a;
      }
    }
    if (found < 0) return fail("pullback of a dual object is missing");
    star_obj.push_back(found);
  }
  std::vector<int> star_mor;
  for (int e = 0; e < Ds.category.morphism_count(); ++e) {
    const auto& me = Ds.category.morphism(e);
    std::vector<int> comp;
    for (int x = 0; x < C.object_count(); ++x)
      comp.push_back(Ds.transformations[static_cast<std::size_t>(e)][static_cast<std::size_t>(Phi.objects[static_cast<std::size_t>(x)])]);
    int found = -1;
    for (int t = 0; t < Cs.category.morphism_count() && found < 0; ++t) {
      const auto& mt = Cs.category.morphism(t);
      if (mt.source == star_obj[static_cast<std::size_t>(me.source)] && mt.target == star_obj[static_cast<std::size_t>(me.target)] &&
          Cs.transformations[static_cast<std::size_t>(t)] == comp)
        found = t;
    }
    star_mor.push_back(found);
  }

  // phi** : C** -> D**, Psi -> Psi o phi*.
  auto bistar_obj = [&](int psi) -> int {
    int found = -1;
    for (int k = 0; k < Dss.category.object_count(); ++k) {
      bool match = true;
      for (int e = 0; e < Ds.category.morphism_count() && match; ++e)
        if (star_mor[static_cast<std::size_t>(e)] >= 0)
          match = Dss.functors[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] ==
                  Css.functors[static_cast<std::size_t>(psi)][static_cast<std::size_t>(star_mor[static_cast<std::size_t>(e)])];
      if (match) {
        if (found >= 0) return -2;
        found = k;
      }
    }
    return found;
  };
  for (int x = 0; x < C.object_count(); ++x) {
    const int lhs = FD.objects[static_cast<std::size_t>(Phi.objects[static_cast<std::size_t>(x)])];
    const int rhs = bistar_obj(FC.objects[static_cast<std::size_t>(x)]);
    if (lhs != rhs) return fail("naturality fails on object " + C.objects()[static_cast<std::size_t>(x)]);
  }
  for (int g = 0; g < C.morphism_count(); ++g) {
    const int img = Phi.morphisms[static_cast<std::size_t>(g)];
    const int theta = FC.morphisms[static_cast<std::size_t>(g)];
    if (img < 0 || theta < 0) continue;
    const int lhs = FD.morphisms[static_cast<std::size_t>(img)];
    const auto& mt = Css.category.morphism(theta);
    const int s = bistar_obj(mt.source);
    const int t = bistar_obj(mt.target);
    std::vector<int> comp;
    for (int a = 0; a < Ds.category.object_count(); ++a)
      comp.push_back(Css.transformations[static_cast<std::size_t>(theta)][static_cast<std::size_t>(star_obj[static_cast<std::size_t>(a)])]);
    int rhs = -1;
    for (int u = 0; u < Dss.category.morphism_count() && rhs < 0; ++u) {
      const auto& mu = Dss.category.morphism(u);
      if (mu.source == s && mu.target == t && Dss.transformations[static_cast<std::size_t>(u)] == comp) rhs = u;
    }
    if (lhs < 0 && rhs < 0) continue;
    if (lhs != rhs) return fail("naturality fails on morphism " + C.morphism(g).name);
  }
  return true;
}

}  // namespace cutpoint
