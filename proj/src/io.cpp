#include "cutpoint/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace cutpoint::io {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const std::string& key) { return path + "." + key; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw JsonError(dot(path, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw JsonError(path, "integer out of range");
  return static_cast<int>(v);
}

int get_nonnegative(const Json& j, const std::string& path) {
  const int v = get_int(j, path);
  if (v < 0) throw JsonError(path, "expected a non-negative integer");
  return v;
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw JsonError(path, "expected a string");
  return j.get<std::string>();
}

const Json& get_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw JsonError(path, "expected an array");
  return j;
}

std::vector<int> int_array(const Json& j, const std::string& path) {
  std::vector<int> out;
  const auto& a = get_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_int(a[i], at(path, i)));
  return out;
}

std::string kind_of(const Json& j, const std::string& path) { return get_string(field(j, "kind", path), dot(path, "kind")); }

int int_or(const Json& j, const std::string& key, const std::string& path, int fallback) {
  const Json* v = optional_field(j, key);
  return v ? get_nonnegative(*v, dot(path, key)) : fallback;
}

// Runs f, turning library argument errors into errors located at path.
template <typename F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const JsonError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw JsonError(path, e.what());
  } catch (const std::out_of_range& e) {
    throw JsonError(path, e.what());
  }
}

// Name -> index for a list of names, rejecting duplicates.
std::map<std::string, int> name_index(const std::vector<std::string>& names, const std::string& path) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], static_cast<int>(i)).second) throw JsonError(at(path, i), "duplicate name '" + names[i] + "'");
  return out;
}

int lookup(const std::map<std::string, int>& names, const Json& j, const std::string& path) {
  const auto name = get_string(j, path);
  const auto it = names.find(name);
  if (it == names.end()) throw JsonError(path, "unknown name '" + name + "'");
  return it->second;
}

std::vector<std::string> string_array(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const auto& a = get_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_string(a[i], at(path, i)));
  return out;
}

std::vector<Rational> rational_array(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  const auto& a = get_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_from_json(a[i], at(path, i)));
  return out;
}

std::vector<std::pair<Rational, Rational>> rational_pairs(const Json& j, const std::string& path) {
  std::vector<std::pair<Rational, Rational>> out;
  const auto& a = get_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = at(path, i);
    if (!a[i].is_array() || a[i].size() != 2) throw JsonError(p, "expected a pair [x, y]");
    out.emplace_back(rational_from_json(a[i][0], at(p, 0)), rational_from_json(a[i][1], at(p, 1)));
  }
  return out;
}

void check_increasing(const std::vector<Rational>& cuts, const Rational& lo, const Rational& hi, bool hi_open,
                      const std::string& path) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] < lo || cuts[i] > hi || (hi_open && cuts[i] == hi))
      throw JsonError(at(path, i), "cut " + cuts[i].str() + " out of range");
    if (i > 0 && !(cuts[i - 1] < cuts[i])) throw JsonError(at(path, i), "cuts must be strictly increasing");
  }
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError(origin, "parse error at byte " + std::to_string(e.byte));
  }
}

Json read_file(const std::string& path) { return parse_json(read_text(path), path); }

int winding_bound_from_env() {
  const char* env = std::getenv("CUTPOINT_WINDING_BOUND");
  if (!env || !*env) return default_winding_bound;
  const std::string_view s(env);
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || value < 1)
    throw std::invalid_argument("CUTPOINT_WINDING_BOUND must be a positive integer");
  return value;
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(get_int(j, path)));
  if (!j.is_string()) throw JsonError(path, "expected a rational \"p/q\"");
  return located(path, [&] { return Rational::parse(j.get<std::string>()); });
}

Json to_json(const Rational& r) { return r.str(); }

NormalizedSimplex simplex_from_json(const Json& j, const std::string& path) {
  if (optional_field(j, "base")) {
    const auto base = int_array(field(j, "base", path), dot(path, "base"));
    if (base.size() != 2) throw JsonError(dot(path, "base"), "expected [dim, index]");
    std::vector<int> word;
    if (const Json* w = optional_field(j, "word")) word = int_array(*w, dot(path, "word"));
    return located(path, [&] { return NormalizedSimplex(SimplexRef{base[0], base[1]}, word); });
  }
  const int d = get_nonnegative(field(j, "dim", path), dot(path, "dim"));
  const int k = get_nonnegative(field(j, "index", path), dot(path, "index"));
  return NormalizedSimplex(SimplexRef{d, k});
}

Json to_json(const NormalizedSimplex& s) {
  return Json{{"base", {s.base().dim, s.base().index}}, {"word", s.word()}};
}

Json to_json(const SimplexRef& s) { return Json{{"dim", s.dim}, {"index", s.index}}; }

std::shared_ptr<const SimplicialSet> load_simplicial(const Json& j, const std::string& path) {
  const auto kind = kind_of(j, path);
  if (kind == "standard_simplex") {
    const int n = get_nonnegative(field(j, "n", path), dot(path, "n"));
    return standard_simplex(n, int_or(j, "dim_bound", path, n));
  }
  if (kind == "product")
    return product(load_simplicial(field(j, "left", path), dot(path, "left")),
                   load_simplicial(field(j, "right", path), dot(path, "right")));
  if (kind == "nerve")
    return nerve(load_category(field(j, "category", path), dot(path, "category")), int_or(j, "dim_bound", path, 3));
  if (kind != "simplicial") throw JsonError(dot(path, "kind"), "unknown simplicial kind '" + kind + "'");

  const int bound = get_nonnegative(field(j, "dim_bound", path), dot(path, "dim_bound"));
  const auto sp = dot(path, "simplices");
  const auto& rows = get_array(field(j, "simplices", path), sp);
  if (rows.size() > static_cast<std::size_t>(bound) + 1) throw JsonError(sp, "more dimensions than dim_bound allows");
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(bound) + 1);
  SimplicialSet::FaceTable faces(static_cast<std::size_t>(bound) + 1);
  for (std::size_t d = 0; d < rows.size(); ++d) {
    const auto& row = get_array(rows[d], at(sp, d));
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto p = at(at(sp, d), k);
      const Json* label = optional_field(row[k], "label");
      if (!row[k].is_object()) throw JsonError(p, "expected an object");
      labels[d].push_back(label ? get_string(*label, dot(p, "label")) : std::to_string(d) + ":" + std::to_string(k));
      if (d == 0) continue;
      const auto fp = dot(p, "faces");
      const auto& arr = get_array(field(row[k], "faces", p), fp);
      if (arr.size() != d + 1) throw JsonError(fp, "expected " + std::to_string(d + 1) + " faces");
      std::vector<NormalizedSimplex> fs;
      for (std::size_t i = 0; i < arr.size(); ++i) fs.push_back(simplex_from_json(arr[i], at(fp, i)));
      faces[d].push_back(std::move(fs));
    }
  }
  // Face references may point forward within a row, so they are checked once every row is read.
  for (std::size_t d = 1; d < faces.size(); ++d)
    for (std::size_t k = 0; k < faces[d].size(); ++k)
      for (std::size_t i = 0; i < faces[d][k].size(); ++i) {
        const auto& f = faces[d][k][i];
        const auto p = at(dot(at(at(sp, d), k), "faces"), i);
        if (f.dim() != static_cast<int>(d) - 1) throw JsonError(p, "face of a " + std::to_string(d) + "-simplex must have dimension " + std::to_string(d - 1));
        const auto b = f.base();
        if (static_cast<std::size_t>(b.index) >= labels[static_cast<std::size_t>(b.dim)].size())
          throw JsonError(p, "no simplex [" + std::to_string(b.dim) + "," + std::to_string(b.index) + "]");
      }
  return std::make_shared<const SimplicialSet>(bound, std::move(labels), std::move(faces));
}

Json to_json(const SimplicialSet& x) {
  Json rows = Json::array();
  for (int d = 0; d <= x.dim_bound(); ++d) {
    Json row = Json::array();
    for (int k = 0; k < x.count_nondegenerate(d); ++k) {
      Json s{{"label", x.label({d, k})}};
      if (d > 0) {
        Json fs = Json::array();
        for (int i = 0; i <= d; ++i) fs.push_back(to_json(x.face({d, k}, i)));
        s["faces"] = fs;
      }
      row.push_back(s);
    }
    rows.push_back(row);
  }
  return Json{{"kind", "simplicial"}, {"dim_bound", x.dim_bound()}, {"simplices", rows}};
}

FiniteCategory load_category(const Json& j, const std::string& path) {
  const auto kind = kind_of(j, path);
  if (kind == "ordinal") return FiniteCategory::ordinal(get_nonnegative(field(j, "n", path), dot(path, "n")));
  if (kind == "discrete") return FiniteCategory::discrete(get_nonnegative(field(j, "k", path), dot(path, "k")));
  if (kind == "cyclic_group")
    return located(dot(path, "k"), [&] { return FiniteCategory::cyclic_group(get_int(field(j, "k", path), dot(path, "k"))); });
  if (kind != "category") throw JsonError(dot(path, "kind"), "unknown category kind '" + kind + "'");

  const auto objects = string_array(field(j, "objects", path), dot(path, "objects"));
  const auto onames = name_index(objects, dot(path, "objects"));
  const auto mp = dot(path, "morphisms");
  const auto& ms = get_array(field(j, "morphisms", path), mp);
  std::vector<FiniteCategory::Morphism> morphisms;
  std::vector<std::string> mnames_list;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto p = at(mp, i);
    const auto name = get_string(field(ms[i], "name", p), dot(p, "name"));
    morphisms.push_back({name, lookup(onames, field(ms[i], "source", p), dot(p, "source")),
                         lookup(onames, field(ms[i], "target", p), dot(p, "target"))});
    mnames_list.push_back(name);
  }
  const auto mnames = name_index(mnames_list, mp);
  std::vector<int> identities;
  const auto ip = dot(path, "identities");
  const auto& ids = get_array(field(j, "identities", path), ip);
  for (std::size_t i = 0; i < ids.size(); ++i) identities.push_back(lookup(mnames, ids[i], at(ip, i)));
  std::map<std::pair<int, int>, int> table;
  if (const Json* c = optional_field(j, "compose")) {
    const auto cp = dot(path, "compose");
    const auto& arr = get_array(*c, cp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at(cp, i);
      if (!arr[i].is_array() || arr[i].size() != 3) throw JsonError(p, "expected [f, g, composite]");
      const int f = lookup(mnames, arr[i][0], at(p, 0));
      const int g = lookup(mnames, arr[i][1], at(p, 1));
      if (!table.emplace(std::pair{f, g}, lookup(mnames, arr[i][2], at(p, 2))).second)
        throw JsonError(p, "pair listed twice");
    }
  }
  return located(path, [&] {
    return FiniteCategory(objects, std::move(morphisms), std::move(identities), std::move(table));
  });
}

Json to_json(const FiniteCategory& c) {
  Json ms = Json::array();
  for (const auto& m : c.morphisms())
    ms.push_back({{"name", m.name},
                  {"source", c.objects()[static_cast<std::size_t>(m.source)]},
                  {"target", c.objects()[static_cast<std::size_t>(m.target)]}});
  Json ids = Json::array();
  for (int o = 0; o < c.object_count(); ++o) ids.push_back(c.morphism(c.identity(o)).name);
  Json table = Json::array();
  for (const auto& [pair, h] : c.table())
    table.push_back({c.morphism(pair.first).name, c.morphism(pair.second).name, c.morphism(h).name});
  return Json{{"kind", "category"}, {"objects", c.objects()}, {"morphisms", ms}, {"identities", ids}, {"compose", table}};
}

ZPlusCategory load_zplus(const Json& j, const std::string& path, std::optional<int> winding_bound) {
  const auto kind = kind_of(j, path);
  const int fallback = winding_bound.value_or(winding_bound_from_env());
  const int w = int_or(j, "winding_bound", path, fallback);
  if (kind == "cyc")
    return located(path, [&] { return cyc_object(get_nonnegative(field(j, "n", path), dot(path, "n")), w); });
  if (kind == "ord_cyc")
    return located(path, [&] { return ord_to_cyc(string_array(field(j, "order", path), dot(path, "order")), w); });
  if (kind != "zplus") throw JsonError(dot(path, "kind"), "unknown Z+-category kind '" + kind + "'");

  const auto objects = string_array(field(j, "objects", path), dot(path, "objects"));
  const auto onames = name_index(objects, dot(path, "objects"));
  const auto mp = dot(path, "morphisms");
  const auto& ms = get_array(field(j, "morphisms", path), mp);
  std::vector<ZMorphism> morphisms;
  std::vector<std::string> mnames_list;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto p = at(mp, i);
    const auto name = get_string(field(ms[i], "name", p), dot(p, "name"));
    const int winding = get_nonnegative(field(ms[i], "winding", p), dot(p, "winding"));
    if (winding > w) throw JsonError(dot(p, "winding"), "winding exceeds the bound " + std::to_string(w));
    morphisms.push_back({name, lookup(onames, field(ms[i], "source", p), dot(p, "source")),
                         lookup(onames, field(ms[i], "target", p), dot(p, "target")), winding});
    mnames_list.push_back(name);
  }
  const auto mnames = name_index(mnames_list, mp);
  auto names = [&](const std::string& key) {
    std::vector<int> out;
    const auto p = dot(path, key);
    const auto& arr = get_array(field(j, key, path), p);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(lookup(mnames, arr[i], at(p, i)));
    return out;
  };
  auto identities = names("identities");
  auto units = names("units");
  ZPlusCategory::Table table;
  const auto cp = dot(path, "compose");
  const auto& arr = get_array(field(j, "compose", path), cp);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = at(cp, i);
    if (!arr[i].is_array() || arr[i].size() != 3) throw JsonError(p, "expected [f, g, composite]");
    const int f = lookup(mnames, arr[i][0], at(p, 0));
    const int g = lookup(mnames, arr[i][1], at(p, 1));
    if (!table.emplace(std::pair{f, g}, lookup(mnames, arr[i][2], at(p, 2))).second)
      throw JsonError(p, "pair listed twice");
  }
  return located(path, [&] {
    return ZPlusCategory(objects, std::move(morphisms), std::move(identities), std::move(units), std::move(table), w);
  });
}

Json to_json(const ZPlusCategory& c) {
  auto object = [&](int o) { return c.objects()[static_cast<std::size_t>(o)]; };
  auto name = [&](int f) { return c.morphism(f).name; };
  Json ms = Json::array();
  for (const auto& m : c.morphisms())
    ms.push_back({{"name", m.name}, {"source", object(m.source)}, {"target", object(m.target)}, {"winding", m.winding}});
  Json ids = Json::array();
  Json units = Json::array();
  for (int o = 0; o < c.object_count(); ++o) {
    ids.push_back(name(c.identity(o)));
    units.push_back(name(c.unit(o)));
  }
  Json table = Json::array();
  for (const auto& [pair, h] : c.table()) table.push_back({name(pair.first), name(pair.second), name(h)});
  return Json{{"kind", "zplus"},     {"winding_bound", c.winding_bound()}, {"objects", c.objects()},
              {"morphisms", ms},     {"identities", ids},                  {"units", units},
              {"compose", table}};
}

bool is_cyclic_kind(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) return false;
  const auto k = j["kind"].get<std::string>();
  return k == "cyclic" || k == "cyclic_nerve" || k == "representable_cyclic";
}

CyclicSpace load_cyclic(const Json& j, const std::string& path) {
  const auto kind = kind_of(j, path);
  if (kind == "cyclic_nerve") {
    auto nerve = cyclic_nerve(load_category(field(j, "category", path), dot(path, "category")),
                              int_or(j, "dim_bound", path, 3));
    auto set = nerve.set;
    return {set, std::nullopt, std::move(nerve)};
  }
  if (kind == "representable_cyclic") {
    const int n = get_nonnegative(field(j, "n", path), dot(path, "n"));
    auto rep = representable_cyclic(n, int_or(j, "dim_bound", path, std::max(3, n + 1)));
    auto set = rep.set;
    return {set, std::move(rep), std::nullopt};
  }
  if (kind != "cyclic") throw JsonError(dot(path, "kind"), "unknown cyclic kind '" + kind + "'");
  auto base = load_simplicial(field(j, "base", path), dot(path, "base"));
  const auto tp = dot(path, "tau");
  const auto& rows = get_array(field(j, "tau", path), tp);
  std::vector<std::vector<int>> tau;
  for (std::size_t n = 0; n < rows.size(); ++n) tau.push_back(int_array(rows[n], at(tp, n)));
  const auto report = validate(*base);
  if (!report.ok())
    throw JsonError(dot(path, "base"), "invalid simplicial set: " + report.violations.front().identity + " (" +
                                           report.violations.front().detail + ")");
  return {located(tp, [&] { return std::make_shared<const CyclicSet>(base, std::move(tau)); }), std::nullopt,
          std::nullopt};
}

Json to_json(const CyclicSet& x) { return Json{{"kind", "cyclic"}, {"base", to_json(*x.base())}, {"tau", x.tau_table()}}; }

RealizationPoint point_from_json(const std::shared_ptr<const SimplicialSet>& space, const Json& j,
                                 const std::string& path) {
  const auto cuts = rational_array(field(j, "cuts", path), dot(path, "cuts"));
  check_increasing(cuts, Rational(0), Rational(1), false, dot(path, "cuts"));
  const auto simplex = simplex_from_json(field(j, "simplex", path), dot(path, "simplex"));
  return located(path, [&] { return normalize_point(space, cuts, simplex); });
}

Json to_json(const RealizationPoint& p) {
  Json cuts = Json::array();
  for (const auto& c : p.cuts()) cuts.push_back(c.str());
  return Json{{"cuts", cuts}, {"simplex", to_json(p.simplex())}};
}

CyclicPoint cyclic_point_from_json(const std::shared_ptr<const CyclicSet>& space, const Json& j,
                                   const std::string& path) {
  auto cuts = rational_array(field(j, "cuts", path), dot(path, "cuts"));
  for (auto& c : cuts) c = c.frac();
  if (cuts.empty()) throw JsonError(dot(path, "cuts"), "a point of the circle realization needs at least one cut");
  check_increasing(cuts, Rational(0), Rational(1), true, dot(path, "cuts"));
  const auto simplex = simplex_from_json(field(j, "simplex", path), dot(path, "simplex"));
  long offset = 0;
  if (const Json* o = optional_field(j, "offset")) offset = get_int(*o, dot(path, "offset"));
  return located(path, [&] { return normalize_cyclic_point(space, cuts, simplex, offset); });
}

Json to_json(const CyclicPoint& p) {
  Json cuts = Json::array();
  for (const auto& c : p.cuts()) cuts.push_back(c.str());
  return Json{{"cuts", cuts}, {"simplex", to_json(p.simplex())}};
}

PLHomeo homeo_from_json(const Json& j, const std::string& path) {
  const auto bp = rational_pairs(field(j, "breakpoints", path), dot(path, "breakpoints"));
  return located(path, [&] { return PLHomeo(bp); });
}

CirclePLHomeo circle_homeo_from_json(const Json& j, const std::string& path) {
  if (const Json* r = optional_field(j, "rotation")) return CirclePLHomeo::rotation(rational_from_json(*r, dot(path, "rotation")));
  const auto lift = rational_pairs(field(j, "lift", path), dot(path, "lift"));
  return located(path, [&] { return CirclePLHomeo(lift); });
}

Measure measure_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "lebesgue") return Measure::lebesgue();
  const auto b = rational_array(field(j, "breakpoints", path), dot(path, "breakpoints"));
  const auto d = rational_array(field(j, "density", path), dot(path, "density"));
  return located(path, [&] { return Measure(b, d); });
}

MonotoneMap monotone_from_json(const Json& j, const std::string& path) {
  const int target = get_nonnegative(field(j, "target", path), dot(path, "target"));
  auto values = int_array(field(j, "values", path), dot(path, "values"));
  return located(path, [&] { return MonotoneMap(target, std::move(values)); });
}

CycMorphism cyc_morphism_from_json(const Json& j, const std::string& path) {
  const int target = get_nonnegative(field(j, "target", path), dot(path, "target"));
  auto values = int_array(field(j, "values", path), dot(path, "values"));
  if (values.empty()) throw JsonError(dot(path, "values"), "expected at least one value");
  const int source = static_cast<int>(values.size()) - 1;
  if (const Json* s = optional_field(j, "source"))
    if (get_nonnegative(*s, dot(path, "source")) != source)
      throw JsonError(dot(path, "source"), "does not match the number of values");
  return located(path, [&] { return CycMorphism(source, target, std::move(values)); });
}

Json to_json(const CycMorphism& f) {
  return Json{{"source", f.source()}, {"target", f.target()}, {"values", f.values()}};
}

}  // namespace cutpoint::io
