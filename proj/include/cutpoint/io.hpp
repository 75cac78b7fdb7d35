#pragma once

// JSON encodings of every model type. Rationals are "p/q" strings; objects,
// morphisms and simplices are referenced by name or by [dim, index].
// Loading errors carry the JSON path of the offending field.

#include "cutpoint/circle.hpp"
#include "cutpoint/cyclic.hpp"
#include "cutpoint/lambda.hpp"
#include "cutpoint/realize.hpp"
#include "cutpoint/sset.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace cutpoint::io {

using Json = nlohmann::ordered_json;

class JsonError : public std::invalid_argument {
public:
  JsonError(const std::string& path, const std::string& message)
      : std::invalid_argument(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

/// The whole file as text.
std::string read_text(const std::string& path);
/// Parse failures name `origin` and the byte offset.
Json parse_json(const std::string& text, const std::string& origin);
Json read_file(const std::string& path);

/// CUTPOINT_WINDING_BOUND if set, else the library default.
int winding_bound_from_env();

Rational rational_from_json(const Json& j, const std::string& path);
Json to_json(const Rational& r);

std::shared_ptr<const SimplicialSet> load_simplicial(const Json& j, const std::string& path = "$");
Json to_json(const SimplicialSet& x);

FiniteCategory load_category(const Json& j, const std::string& path = "$");
Json to_json(const FiniteCategory& c);

ZPlusCategory load_zplus(const Json& j, const std::string& path = "$",
                         std::optional<int> winding_bound = std::nullopt);
Json to_json(const ZPlusCategory& c);

/// A cyclic set together with whatever construction produced it.
struct CyclicSpace {
  std::shared_ptr<const CyclicSet> set;
  std::optional<CyclicRepresentable> representable;
  std::optional<CyclicNerve> nerve;
};
CyclicSpace load_cyclic(const Json& j, const std::string& path = "$");
Json to_json(const CyclicSet& x);

/// True for the kinds load_cyclic accepts.
bool is_cyclic_kind(const Json& j);

NormalizedSimplex simplex_from_json(const Json& j, const std::string& path);
Json to_json(const NormalizedSimplex& s);
Json to_json(const SimplexRef& s);

RealizationPoint point_from_json(const std::shared_ptr<const SimplicialSet>& space, const Json& j,
                                 const std::string& path);
Json to_json(const RealizationPoint& p);

CyclicPoint cyclic_point_from_json(const std::shared_ptr<const CyclicSet>& space, const Json& j,
                                   const std::string& path);
Json to_json(const CyclicPoint& p);

PLHomeo homeo_from_json(const Json& j, const std::string& path);
CirclePLHomeo circle_homeo_from_json(const Json& j, const std::string& path);
Measure measure_from_json(const Json& j, const std::string& path);

MonotoneMap monotone_from_json(const Json& j, const std::string& path);
CycMorphism cyc_morphism_from_json(const Json& j, const std::string& path);
Json to_json(const CycMorphism& f);

}  // namespace cutpoint::io
