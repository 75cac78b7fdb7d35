// cutpoint: command-line front end. Every subcommand prints a JSON report on
// standard output; diagnostics go to standard error. Exit status is 0 when
// all checks pass, 1 when a check fails and 2 on bad input or usage.

#include "cutpoint/io.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace cutpoint;
using io::Json;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

struct Report {
  std::string command;
  Json inputs = Json::array();
  Json results = Json::array();
  Json output = Json::object();

  static bool is_inline(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    return first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
  }

  void name_input(const std::string& name, const std::string& arg) {
    if (!arg.empty()) origins[name] = (is_inline(arg) ? "--" + name : arg) + ": $";
  }

  // Loads an argument that is either inline JSON or a file path.
  Json load(const std::string& name, const std::string& arg) {
    const bool inline_json = is_inline(arg);
    const std::string text = inline_json ? arg : io::read_text(arg);
    inputs.push_back({{"name", name}, {"source", inline_json ? "inline" : arg}, {"sha256", sha256_hex(text)}});
    return io::parse_json(text, inline_json ? "--" + name : arg);
  }

  // Root JSON path for errors inside the named input.
  const std::string& at(const std::string& name) const { return origins.at(name); }
  std::map<std::string, std::string> origins;

  void check(const std::string& name, bool pass, Json witness = nullptr) {
    Json r{{"check", name}, {"pass", pass}};
    if (!witness.is_null()) r["witness"] = std::move(witness);
    results.push_back(std::move(r));
  }

  int exit_code() const {
    for (const auto& r : results)
      if (!r["pass"].get<bool>()) return 1;
    return 0;
  }

  int emit() const {
    const int code = exit_code();
    const Json j{{"command", command}, {"inputs", inputs}, {"results", results}, {"output", output}, {"exit_code", code}};
    std::cout << j.dump(2) << '\n';
    return code;
  }
};

Json violations_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations)
    out.push_back({{"identity", v.identity}, {"simplex", io::to_json(v.simplex)}, {"detail", v.detail}});
  return out;
}

Json counts_json(const SimplicialSet& x) {
  Json out = Json::array();
  for (int d = 0; d <= x.dim_bound(); ++d) out.push_back(x.count_nondegenerate(d));
  return out;
}

Rational random_interior(std::mt19937_64& gen) {
  const long q = std::uniform_int_distribution<long>(2, 24)(gen);
  return Rational(std::uniform_int_distribution<long>(1, q - 1)(gen), q);
}

RealizationPoint random_point(const std::shared_ptr<const SimplicialSet>& x, std::mt19937_64& gen) {
  std::vector<int> dims;
  for (int d = 0; d <= x->dim_bound(); ++d)
    if (x->count_nondegenerate(d) > 0) dims.push_back(d);
  if (dims.empty()) throw std::invalid_argument("space has no simplices");
  const int d = dims[std::uniform_int_distribution<std::size_t>(0, dims.size() - 1)(gen)];
  const int k = std::uniform_int_distribution<int>(0, x->count_nondegenerate(d) - 1)(gen);
  std::set<Rational> cuts;
  while (static_cast<int>(cuts.size()) < d) cuts.insert(random_interior(gen));
  return RealizationPoint(x, {cuts.begin(), cuts.end()}, {d, k});
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_valid(const SimplicialSet& x, const std::string& what) {
  const auto r = validate(x);
  if (!r.ok())
    throw std::invalid_argument(what + " is not a valid simplicial set: " + r.violations.front().identity + " (" +
                                r.violations.front().detail + ")");
}

Json names_of(const ZPlusCategory& c, const std::vector<int>& objects) {
  Json out = Json::array();
  for (int o : objects) out.push_back(c.objects()[static_cast<std::size_t>(o)]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-point realizations of simplicial and cyclic sets"};
  app.require_subcommand(1);

  std::string category, space, left, right, u, v, measure, simplex, map, point, input, coordinates;
  int dim_bound = 3;
  int samples = 100;
  unsigned long seed = 1;
  std::optional<int> winding;

  auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a finite category");
  nerve_cmd->add_option("--category", category, "Category JSON")->required();
  nerve_cmd->add_option("--dim-bound", dim_bound, "Highest dimension presented")->check(CLI::NonNegativeNumber);

  auto* cyc_nerve_cmd = app.add_subcommand("cyclic-nerve", "Cyclic nerve of a finite category");
  cyc_nerve_cmd->add_option("--category", category, "Category JSON")->required();
  cyc_nerve_cmd->add_option("--dim-bound", dim_bound, "Highest dimension presented")->check(CLI::NonNegativeNumber);

  auto* product_cmd = app.add_subcommand("product-check", "Round trips of the product bijection");
  product_cmd->add_option("--left", left, "Simplicial set JSON")->required();
  product_cmd->add_option("--right", right, "Simplicial set JSON")->required();
  product_cmd->add_option("--samples", samples, "Random points per direction")->check(CLI::NonNegativeNumber);
  product_cmd->add_option("--seed", seed, "Random seed");

  auto* metric_cmd = app.add_subcommand("metric", "Distance between two realization points");
  metric_cmd->add_option("--space", space, "Simplicial set JSON")->required();
  metric_cmd->add_option("--u", u, "Point JSON")->required();
  metric_cmd->add_option("--v", v, "Point JSON")->required();
  metric_cmd->add_option("--measure", measure, "Measure JSON (default Lebesgue)");

  auto* act_cmd = app.add_subcommand("act", "Apply a structure map to a simplex");
  act_cmd->add_option("--space", space, "Simplicial or cyclic set JSON")->required();
  act_cmd->add_option("--simplex", simplex, "Simplex JSON")->required();
  act_cmd->add_option("--map", map, "Monotone map, or cyclic morphism for cyclic sets")->required();

  auto* dual_cmd = app.add_subcommand("dualize", "Dual of a cyclic Z+-category");
  dual_cmd->add_option("--category", category, "Z+-category JSON")->required();
  dual_cmd->add_option("--winding-bound", winding, "Winding bound of the dual");

  auto* zplus_cmd = app.add_subcommand("check-zplus", "Decide whether a Z+-category comes from a linear order");
  zplus_cmd->add_option("--category", category, "Z+-category JSON")->required();

  auto* coords_cmd = app.add_subcommand("coords", "Coordinates of points of simplices and cyclic simplices");
  coords_cmd->add_option("--space", space, "Standard simplex or representable cyclic set JSON")->required();
  auto* point_opt = coords_cmd->add_option("--point", point, "Point JSON");
  auto* coords_opt = coords_cmd->add_option("--coordinates", coordinates, "Coordinate list JSON");
  point_opt->excludes(coords_opt);

  auto* cut_cmd = app.add_subcommand("cut-basepoint", "Read a circle point as an interval point");
  cut_cmd->add_option("--space", space, "Cyclic set JSON")->required();
  cut_cmd->add_option("--point", point, "Circle point JSON")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check a model file");
  validate_cmd->add_option("--input", input, "Model JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Report report;
  for (const auto& [name, arg] : std::initializer_list<std::pair<const char*, const std::string*>>{
           {"category", &category}, {"space", &space}, {"left", &left}, {"right", &right}, {"u", &u}, {"v", &v},
           {"measure", &measure}, {"simplex", &simplex}, {"map", &map}, {"point", &point}, {"input", &input},
           {"coordinates", &coordinates}})
    report.name_input(name, *arg);
  try {
    if (*nerve_cmd) {
      report.command = "nerve";
      const auto c = io::load_category(report.load("category", category), report.at("category"));
      const auto problems = c.validate();
      report.check("category valid", problems.empty(), problems.empty() ? Json() : Json(problems));
      const auto x = nerve(c, dim_bound);
      const auto r = validate(*x);
      report.check("simplicial identities", r.ok(), r.ok() ? Json() : violations_json(r));
      report.output = {{"nondegenerate", counts_json(*x)}, {"presentation", io::to_json(*x)}};
    } else if (*cyc_nerve_cmd) {
      report.command = "cyclic-nerve";
      const auto c = io::load_category(report.load("category", category), report.at("category"));
      const auto problems = c.validate();
      report.check("category valid", problems.empty(), problems.empty() ? Json() : Json(problems));
      if (!problems.empty()) return report.emit();
      const auto n = cyclic_nerve(c, dim_bound);
      const auto simplicial = validate(*n.set->base());
      report.check("simplicial identities", simplicial.ok(), simplicial.ok() ? Json() : violations_json(simplicial));
      const auto cyclic = validate_cyclic(*n.set);
      report.check("cyclic identities", cyclic.ok(), cyclic.ok() ? Json() : violations_json(cyclic));
      Json total = Json::array();
      Json order = Json::array();
      for (int d = 0; d <= dim_bound; ++d) {
        total.push_back(n.set->simplices(d).size());
        // Order of t_d as a permutation.
        long ord = 1;
        for (const auto& s : n.set->simplices(d)) {
          long len = 1;
          for (auto t = n.set->tau(s); !(t == s); t = n.set->tau(t)) ++len;
          ord = std::lcm(ord, len);
        }
        order.push_back(ord);
      }
      report.output = {{"nondegenerate", counts_json(*n.set->base())},
                       {"total", total},
                       {"tau_order", order},
                       {"presentation", io::to_json(*n.set)}};
    } else if (*product_cmd) {
      report.command = "product-check";
      const auto x = io::load_simplicial(report.load("left", left), report.at("left"));
      const auto y = io::load_simplicial(report.load("right", right), report.at("right"));
      require_valid(*x, "left");
      require_valid(*y, "right");
      const auto p = product(x, y);
      const auto r = validate(*p);
      report.check("product valid", r.ok(), r.ok() ? Json() : violations_json(r));
      const auto dx = representable_dimension(*x);
      const auto dy = representable_dimension(*y);
      if (dx && dy) {
        const long expect = binomial(*dx + *dy, *dx);
        const long got = p->count_nondegenerate(*dx + *dy);
        report.check("top simplices are shuffles", got == expect, Json{{"expected", expect}, {"found", got}});
      }
      std::mt19937_64 gen(seed);
      Json split_fail;
      Json merge_fail;
      for (int i = 0; i < samples; ++i) {
        const auto q = random_point(p, gen);
        const auto [a, b] = split_product(q);
        if (split_fail.is_null() && !(merge_product(p, a, b) == q)) split_fail = io::to_json(q);
        const auto qa = random_point(x, gen);
        const auto qb = random_point(y, gen);
        const auto merged = split_product(merge_product(p, qa, qb));
        if (merge_fail.is_null() && !(merged.first == qa && merged.second == qb))
          merge_fail = Json{{"left", io::to_json(qa)}, {"right", io::to_json(qb)}};
      }
      report.check("merge after split", split_fail.is_null(), split_fail);
      report.check("split after merge", merge_fail.is_null(), merge_fail);
      report.output = {{"samples", samples}, {"seed", seed}, {"nondegenerate", counts_json(*p)}};
    } else if (*metric_cmd) {
      report.command = "metric";
      const auto x = io::load_simplicial(report.load("space", space), report.at("space"));
      require_valid(*x, "space");
      const auto pu = io::point_from_json(x, report.load("u", u), report.at("u"));
      const auto pv = io::point_from_json(x, report.load("v", v), report.at("v"));
      const Measure mu = measure.empty() ? Measure::lebesgue() : io::measure_from_json(report.load("measure", measure), report.at("measure"));
      report.output = {{"distance", io::to_json(distance(mu, pu, pv))}};
    } else if (*act_cmd) {
      report.command = "act";
      const auto sj = report.load("space", space);
      const auto sx = io::simplex_from_json(report.load("simplex", simplex), report.at("simplex"));
      const auto mj = report.load("map", map);
      NormalizedSimplex result;
      std::shared_ptr<const SimplicialSet> base;
      if (io::is_cyclic_kind(sj)) {
        const auto cs = io::load_cyclic(sj, report.at("space"));
        base = cs.set->base();
        if (!base->contains(sx.base())) throw io::JsonError(report.at("simplex"), "not a simplex of the space");
        result = act_cyclic(*cs.set, sx, io::cyc_morphism_from_json(mj, report.at("map")));
      } else {
        base = io::load_simplicial(sj, report.at("space"));
        require_valid(*base, "space");
        if (!base->contains(sx.base())) throw io::JsonError(report.at("simplex"), "not a simplex of the space");
        result = act(*base, sx, io::monotone_from_json(mj, report.at("map")));
      }
      report.output = {{"simplex", io::to_json(result)}, {"label", base->label(result.base())}};
    } else if (*dual_cmd) {
      report.command = "dualize";
      const auto c = io::load_zplus(report.load("category", category), report.at("category"));
      const auto verdict = check_zplus(c);
      report.check("input comes from a linear order", verdict.ok, verdict.ok ? Json() : Json(verdict.reason));
      if (!verdict.ok) return report.emit();
      const auto dual = dualize(c, winding);
      const auto dv = check_zplus(dual.category);
      std::string why;
      report.check("dual comes from a linear order of the same size",
                   dv.ok && dv.order.size() == verdict.order.size(), dv.ok ? Json() : Json(dv.reason));
      if (dv.ok) {
        const bool iso = is_isomorphism(dv.certificate, cyc_object(static_cast<int>(dv.order.size()) - 1, dual.category.winding_bound()),
                                        dual.category, &why);
        report.check("dual isomorphism certificate", iso, iso ? Json() : Json(why));
        const auto bidual = dualize(dual.category);
        const auto unit = double_dual_unit(c, dual, bidual);
        const bool unit_iso = is_isomorphism(unit, c, bidual.category, &why);
        report.check("double-dual unit is an isomorphism", unit_iso, unit_iso ? Json() : Json(why));
      }
      report.output = {{"dual", io::to_json(dual.category)}, {"functors", dual.functors}};
    } else if (*zplus_cmd) {
      report.command = "check-zplus";
      const auto c = io::load_zplus(report.load("category", category), report.at("category"));
      const auto verdict = check_zplus(c);
      report.check("comes from a linear order", verdict.ok, verdict.ok ? Json() : Json(verdict.reason));
      Json m = Json::array();
      for (const auto& [xy, value] : verdict.m)
        m.push_back({c.objects()[static_cast<std::size_t>(xy.first)], c.objects()[static_cast<std::size_t>(xy.second)], value});
      report.output = {{"ok", verdict.ok}, {"reason", verdict.reason}, {"counterexample", names_of(c, verdict.counterexample)},
                       {"order", names_of(c, verdict.order)}, {"m", m}};
    } else if (*coords_cmd) {
      report.command = "coords";
      const auto sj = report.load("space", space);
      if (point.empty() == coordinates.empty()) throw std::invalid_argument("give exactly one of --point and --coordinates");
      if (io::is_cyclic_kind(sj)) {
        const auto cs = io::load_cyclic(sj, report.at("space"));
        if (!cs.representable) throw io::JsonError(report.at("space"), "coordinates need a representable cyclic set");
        const auto& rep = *cs.representable;
        if (!point.empty()) {
          const auto p = io::cyclic_point_from_json(rep.set, report.load("point", point), report.at("point"));
          const auto xs = cyc_coordinates(rep, p);
          report.check("round trip", from_cyc_coordinates(rep, xs) == p);
          Json out = Json::array();
          for (const auto& c : xs) out.push_back(c.str());
          report.output = {{"coordinates", out}};
        } else {
          const auto cj = report.load("coordinates", coordinates);
          std::vector<Rational> xs;
          for (std::size_t i = 0; i < cj.size(); ++i) xs.push_back(io::rational_from_json(cj[i], report.at("coordinates") + "[" + std::to_string(i) + "]"));
          const auto p = from_cyc_coordinates(rep, xs);
          report.check("round trip", cyc_coordinates(rep, p) == xs);
          report.output = {{"point", io::to_json(p)}};
        }
      } else {
        const auto x = io::load_simplicial(sj, report.at("space"));
        if (!representable_dimension(*x)) throw io::JsonError(report.at("space"), "coordinates need a standard simplex");
        if (!point.empty()) {
          const auto p = io::point_from_json(x, report.load("point", point), report.at("point"));
          const auto xs = to_coordinates(p);
          report.check("round trip", from_coordinates(x, xs) == p);
          Json out = Json::array();
          for (const auto& c : xs) out.push_back(c.str());
          report.output = {{"coordinates", out}};
        } else {
          const auto cj = report.load("coordinates", coordinates);
          std::vector<Rational> xs;
          for (std::size_t i = 0; i < cj.size(); ++i) xs.push_back(io::rational_from_json(cj[i], report.at("coordinates") + "[" + std::to_string(i) + "]"));
          const auto p = from_coordinates(x, xs);
          report.check("round trip", to_coordinates(p) == xs);
          report.output = {{"point", io::to_json(p)}};
        }
      }
    } else if (*cut_cmd) {
      report.command = "cut-basepoint";
      const auto cs = io::load_cyclic(report.load("space", space), report.at("space"));
      const auto p = io::cyclic_point_from_json(cs.set, report.load("point", point), report.at("point"));
      const auto q = cut_at_basepoint(p);
      report.check("round trip", join_at_basepoint(cs.set, q) == p);
      report.output = {{"point", io::to_json(q)}};
    } else if (*validate_cmd) {
      report.command = "validate";
      const auto j = report.load("input", input);
      const std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
      static const std::set<std::string> simplicial{"simplicial", "standard_simplex", "product", "nerve"};
      static const std::set<std::string> categories{"category", "ordinal", "discrete", "cyclic_group"};
      static const std::set<std::string> zplus{"zplus", "cyc", "ord_cyc"};
      if (simplicial.count(kind)) {
        const auto r = validate(*io::load_simplicial(j, report.at("input")));
        report.check("simplicial identities", r.ok(), r.ok() ? Json() : violations_json(r));
      } else if (io::is_cyclic_kind(j)) {
        const auto cs = io::load_cyclic(j, report.at("input"));
        const auto r = validate_cyclic(*cs.set);
        report.check("cyclic identities", r.ok(), r.ok() ? Json() : violations_json(r));
      } else if (categories.count(kind)) {
        const auto problems = io::load_category(j, report.at("input")).validate();
        report.check("category valid", problems.empty(), problems.empty() ? Json() : Json(problems));
      } else if (zplus.count(kind)) {
        const auto problems = io::load_zplus(j, report.at("input")).problems();
        report.check("Z+-category axioms", problems.empty(), problems.empty() ? Json() : Json(problems));
      } else {
        throw io::JsonError(report.at("input") + ".kind", "unknown kind '" + kind + "'");
      }
      report.output = {{"kind", kind}};
    }
    return report.emit();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
