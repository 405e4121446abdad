#include "steinberg/json_io.hpp"

#include <sstream>

namespace steinberg {

Json to_json(const KClass& a) { return Json::array({a.r, a.d}); }

Json to_json(const Heart& h) {
  if (h.is_half()) return "half";
  return Json{{"nu", h.n()}};
}

Json to_json(const Window& w) { return Json{{"m", w.m}}; }

Json to_json(const Composition& c) {
  Json j = Json::array();
  for (const auto& a : c) j.push_back(to_json(a));
  return j;
}

Json to_json(const HNType& t) { return to_json(t.parts); }

Json to_json(const BundleType& b) { return Json{{"degrees", b.degrees}, {"torsion", b.torsion_deg}}; }

Json to_json(const Rational& q) {
  if (denominator(q) == 1) {
    const BigInt& n = numerator(q);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(n);
  }
  return to_string(q);
}

Json to_json(const Series& s) {
  Json c = Json::array();
  for (const auto& q : s.coeffs()) c.push_back(to_json(q));
  return Json{{"cutoff", s.cutoff()}, {"coeffs", c}};
}

Json to_json(const CMatrix& w) {
  Json e = Json::array();
  for (std::size_t i = 0; i < w.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < w.cols(); ++j) row.push_back(to_json(w.at(i, j)));
    e.push_back(row);
  }
  return Json{{"rows", w.rows()}, {"cols", w.cols()}, {"entries", e}};
}

Json to_json(const TopSeries& t) {
  Json c = Json::array();
  for (const auto& x : t.coeffs) c.push_back(to_json(Rational(x)));
  return Json{{"top", t.top}, {"coeffs", c}};
}

namespace {

std::string symbolic_gen(Family f, int shift) {
  std::string idx = "i";
  if (shift > 0) idx += "+" + std::to_string(shift);
  if (shift < 0) idx += std::to_string(shift);
  return "ch_{" + idx + "}(" + to_string(f) + ")";
}

}  // namespace

Json to_json(const GenMap& m) {
  Json out = Json::array();
  for (const auto& r : m.normalized().rules) {
    Json image = Json::array();
    for (const auto& t : r.image) image.push_back(Json::array({to_json(t.coeff), symbolic_gen(t.family, t.shift)}));
    out.push_back(Json{{"gen", symbolic_gen(r.source, 0)}, {"min_index", r.min_index}, {"image", image}});
  }
  return out;
}

Json to_json(const Hasse& g) {
  Json nodes = Json::array();
  for (const auto& w : g.nodes)
    nodes.push_back(Json{{"id", stable_hash(w)}, {"dim", stratum_dim(w)}, {"matrix", to_json(w)}});
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json to_json(const PBWSequence& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps)
    steps.push_back(Json{{"kind", to_string(s.kind)},
                         {"beta_before", to_json(s.beta_before)},
                         {"beta_after", to_json(s.beta_after)},
                         {"matrix", to_json(s.matrix)}});
  return Json{{"t", p.t()}, {"steps", steps}};
}

Json to_json(const CrossingDiagram& d) {
  Json strands = Json::array();
  for (const auto& s : d.strands)
    strands.push_back(Json{{"cell", Json::array({s.row, s.col})}, {"weight", to_json(s.weight)}, {"top", s.top_pos}, {"bottom", s.bot_pos}});
  Json regions = Json::array();
  for (const auto& r : d.regions) regions.push_back(Json{{"partition", r.partition}, {"class", to_json(r.cls)}});
  Json adj = Json::array();
  for (const auto& [a, b] : d.adjacency) adj.push_back(Json::array({a, b}));
  return Json{{"rows", d.s}, {"cols", d.l}, {"strands", strands}, {"word", d.crossings}, {"regions", regions}, {"adjacency", adj}};
}

Json to_json(const WindowedSet& s) {
  Json ms = Json::array();
  for (const auto& w : s.matrices) ms.push_back(to_json(w));
  return Json{{"window", to_json(s.window)},
              {"bound", Json{{"kind", s.bound.kind == EntryBound::Kind::Slope ? "slope" : "degree"}, {"value", s.bound.bound}}},
              {"matrices", ms}};
}

KClass kclass_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw DomainError("a class must be a two-element integer array");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

CMatrix cmatrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw DomainError("matrix JSON needs an entries field");
  std::vector<std::vector<KClass>> rows;
  for (const auto& row : j.at("entries")) {
    if (!row.is_array()) throw DomainError("matrix rows must be arrays");
    std::vector<KClass> r;
    for (const auto& e : row) r.push_back(kclass_from_json(e));
    rows.push_back(std::move(r));
  }
  CMatrix w = CMatrix::from_rows(rows);
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != w.rows()) throw DomainError("rows field disagrees with entries");
  if (j.contains("cols") && j.at("cols").get<std::size_t>() != w.cols()) throw DomainError("cols field disagrees with entries");
  return w;
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }
  throw DomainError("coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

Series series_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  const int cutoff = j.at("cutoff").get<int>();
  if (static_cast<int>(c.size()) != cutoff + 1) throw DomainError("series length does not match its cutoff");
  return Series(cutoff, std::move(c));
}

TopSeries top_series_from_json(const Json& j) {
  TopSeries t{j.at("top").get<std::int64_t>(), {}};
  for (const auto& x : j.at("coeffs")) {
    const Rational q = rational_from_json(x);
    if (denominator(q) != 1) throw DomainError("top series coefficients are integers");
    t.coeffs.push_back(numerator(q));
  }
  return t;
}

KClass parse_kclass(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("invalid class '" + text + "', expected r,d");
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const long long r = std::stoll(a, &u1), d = std::stoll(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("trailing");
    return {r, d};
  } catch (const std::exception&) {
    throw DomainError("invalid class '" + text + "', expected r,d");
  }
}

Composition parse_composition(const std::string& text) {
  Composition c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    c.push_back(parse_kclass(item));
  }
  if (c.empty()) throw DomainError("empty sequence '" + text + "'");
  return c;
}

}  // namespace steinberg
