#pragma once

#include "steinberg/gradedcoh.hpp"
#include "steinberg/hnstrata.hpp"
#include "steinberg/pbwdiagram.hpp"
#include "steinberg/wposet.hpp"

#include "json.hpp"

#include <string>

namespace steinberg {

using Json = nlohmann::ordered_json;

Json to_json(const KClass& a);
Json to_json(const Heart& h);
Json to_json(const Window& w);
Json to_json(const Composition& c);
Json to_json(const HNType& t);
Json to_json(const BundleType& b);
Json to_json(const Rational& q);  // integer, or "p/q"
Json to_json(const Series& s);
Json to_json(const CMatrix& w);
Json to_json(const TopSeries& t);
Json to_json(const GenMap& m);
Json to_json(const Hasse& g);
Json to_json(const PBWSequence& p);
Json to_json(const CrossingDiagram& d);
Json to_json(const WindowedSet& s);

KClass kclass_from_json(const Json& j);
CMatrix cmatrix_from_json(const Json& j);
Series series_from_json(const Json& j);
TopSeries top_series_from_json(const Json& j);

/// "r,d"
KClass parse_kclass(const std::string& text);
/// "r,d;r,d;..."
Composition parse_composition(const std::string& text);

}  // namespace steinberg
