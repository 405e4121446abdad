#include "cli.hpp"

#include "steinberg/gradedcoh.hpp"
#include "steinberg/hnstrata.hpp"
#include "steinberg/json_io.hpp"
#include "steinberg/pbwdiagram.hpp"
#include "steinberg/verify.hpp"
#include "steinberg/wposet.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace steinberg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string cls, with, heart = "half", rows, cols, alpha, matrix_file, entries, output, format = "json";
  std::string suite = "all";
  std::vector<std::string> seqs;
  int window = 1, cutoff = 10, depth = 8, n = 1, n_max = 50, probe = 3, max_len = 3;
  std::optional<std::int64_t> slope_bound, degree_bound, lo, hi;
  bool klr = false, bundles = false, n0 = false;
  std::uint64_t seed = 0;
};

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + c.output + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  std::string msg = "format '" + c.format + "' is not available here; use one of";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw UsageError(msg);
}

// Malformed command-line classes are usage errors, not domain errors.
KClass arg_kclass(const std::string& s) {
  try {
    return steinberg::parse_kclass(s);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Composition arg_composition(const std::string& s) {
  try {
    return steinberg::parse_composition(s);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

KClass need_class(const Config& c) {
  if (c.cls.empty()) throw UsageError("--class is required");
  return arg_kclass(c.cls);
}

EntryBound need_bound(const Config& c) {
  if (c.slope_bound && c.degree_bound) throw UsageError("--slope-bound and --degree-bound are exclusive");
  if (c.slope_bound) return {EntryBound::Kind::Slope, *c.slope_bound};
  if (c.degree_bound) return {EntryBound::Kind::Degree, *c.degree_bound};
  throw DomainError("the coherent heart has infinitely many cell matrices; pass --slope-bound or --degree-bound");
}

CMatrix need_matrix(const Config& c) {
  if (!c.matrix_file.empty()) {
    std::ifstream f(c.matrix_file);
    if (!f) throw DomainError("cannot read matrix file '" + c.matrix_file + "'");
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw DomainError(std::string("invalid matrix JSON: ") + e.what());
    }
    return cmatrix_from_json(j);
  }
  if (c.entries.empty()) throw UsageError("--matrix or --entries is required");
  // "r,d r,d;r,d r,d"
  std::vector<std::vector<KClass>> rows;
  std::stringstream rs(c.entries);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::stringstream es(row);
    std::string e;
    std::vector<KClass> r;
    while (es >> e) r.push_back(arg_kclass(e));
    rows.push_back(std::move(r));
  }
  return CMatrix::from_rows(rows);
}

void check_klr(const Composition& c) {
  for (const auto& p : c)
    if (!(p.r == 1 || (p.r == 0 && p.d == 1)))
      throw DomainError("part " + to_string(p) + " is not of the form (1,l) or (0,1)");
}

std::string series_csv(const Series& s) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  for (int k = 0; k <= s.cutoff(); ++k) os << 2 * k << ',' << to_string(s[k]) << '\n';
  return os.str();
}

std::string top_csv(const TopSeries& t) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  for (int k = 0; k < t.depth(); ++k) os << t.top - 2 * k << ',' << t.coeffs[static_cast<std::size_t>(k)].str() << '\n';
  return os.str();
}

void out_series(const Config& c, const Series& s, std::ostream& out) {
  require_format(c, {"json", "csv"});
  emit(c, c.format == "csv" ? series_csv(s) : to_json(s).dump() + "\n", out);
}

void out_top(const Config& c, const TopSeries& t, std::ostream& out) {
  require_format(c, {"json", "csv"});
  emit(c, c.format == "csv" ? top_csv(t) : to_json(t).dump() + "\n", out);
}

void cmd_kclass(const Config& c, std::ostream& out) {
  require_format(c, {"json"});
  const KClass a = need_class(c);
  const Heart h = parse_heart(c.heart);
  Json j{{"class", to_json(a)}, {"heart", to_json(h)}, {"positive", heart_positive(a, h)},
         {"tilt", to_json(tilt_class(a))}, {"euler_self", euler_form(a, a)}};
  if (heart_positive(a, Heart::half())) j["stack_dim"] = stack_dim(a);
  if (!h.is_half()) {
    const auto v = d_vec(h.n(), a);
    j["d_vec"] = Json::array({v.v1, v.v2});
  }
  if (!c.with.empty()) {
    const KClass b = arg_kclass(c.with);
    j["euler"] = euler_form(a, b);
    if (heart_positive(a, Heart::half()) && heart_positive(b, Heart::half())) {
      const auto o = slope_cmp(a, b);
      j["slope_cmp"] = o < 0 ? "less" : (o > 0 ? "greater" : "equal");
    }
  }
  emit(c, dump(j), out);
}

void cmd_hn(const Config& c, std::ostream& out) {
  require_format(c, {"json"});
  const KClass a = need_class(c);
  const Window w(c.window);
  Json j = Json::array();
  if (c.bundles) {
    for (const auto& b : bundle_types(a, w)) j.push_back(to_json(b));
  } else {
    for (const auto& t : hn_enumerate(a, w))
      j.push_back(Json{{"parts", to_json(t)}, {"codim", hn_codim(t)}, {"dim", hn_dim(t)}});
  }
  emit(c, dump(Json{{"class", to_json(a)}, {"window", to_json(w)}, {c.bundles ? "bundle_types" : "hn_types", j}}), out);
}

void cmd_wposet(const Config& c, std::ostream& out) {
  require_format(c, {"json", "dot"});
  if (c.rows.empty() || c.cols.empty()) throw UsageError("--rows and --cols are required");
  const Composition ra = arg_composition(c.rows), ca = arg_composition(c.cols);
  if (!c.alpha.empty() && composition_total(ra) != arg_kclass(c.alpha))
    throw DomainError("rows do not sum to --alpha");
  if (c.klr) {
    check_klr(ra);
    check_klr(ca);
  }
  const Heart h = parse_heart(c.heart);
  std::vector<CMatrix> ws;
  Json meta{{"heart", to_json(h)}};
  if (h.is_half()) {
    const auto set = w_enumerate_windowed(ra, ca, Window(c.window), need_bound(c));
    ws = set.matrices;
    meta["window"] = to_json(set.window);
    meta["bound"] = to_json(set)["bound"];
    if (c.n0) meta["n0"] = approx_n0(ra, ca, Window(c.window), set.bound, c.probe, c.n_max).n0;
  } else {
    ws = w_enumerate(ra, ca, h);
  }
  const Hasse g = hasse(ws, h);
  if (c.format == "dot") {
    emit(c, hasse_dot(g), out);
    return;
  }
  meta["rows"] = to_json(ra);
  meta["cols"] = to_json(ca);
  meta["hasse"] = to_json(g);
  emit(c, dump(meta), out);
}

void cmd_pbw(const Config& c, std::ostream& out) {
  require_format(c, {"json", "text", "dot"});
  const CMatrix w = need_matrix(c);
  const auto d = region_map(w);
  if (c.format == "text") return emit(c, wiring_text(d), out);
  if (c.format == "dot") return emit(c, region_dot(d), out);
  emit(c, dump(Json{{"matrix", to_json(w)}, {"sequence", to_json(pbw_sequence(w))}, {"diagram", to_json(d)}}), out);
}

void cmd_series(const std::string& kind, const Config& c, std::ostream& out) {
  if (kind == "coh") return out_series(c, coh_series(need_class(c), c.cutoff), out);
  if (kind == "trunc") return out_series(c, trunc_series(need_class(c), Window(c.window), c.cutoff), out);
  if (kind == "stratum") return out_top(c, stratum_top_series(need_matrix(c), c.depth), out);
  if (kind == "schur") {
    if (c.rows.empty() || c.cols.empty()) throw UsageError("--rows and --cols are required");
    const Composition ra = arg_composition(c.rows), ca = arg_composition(c.cols);
    if (c.klr) {
      check_klr(ra);
      check_klr(ca);
    }
    const auto set = w_enumerate_windowed(ra, ca, Window(c.window), need_bound(c));
    const std::vector<SchurBlock> blocks{{ra, ca, set.matrices}};
    const auto direct = schur_series(blocks, c.depth);
    const auto pbw = schur_series_pbw(blocks, c.depth);
    if (!(direct.aggregate == pbw.aggregate)) throw DomainError("series paths disagree");
    return out_top(c, direct.aggregate, out);
  }
  if (kind == "polyrep") {
    const KClass a = need_class(c);
    std::vector<Seq> seqs;
    if (!c.seqs.empty()) {
      for (const auto& s : c.seqs) seqs.push_back(Seq{arg_composition(s), Heart::half()});
    } else {
      if (!c.lo || !c.hi) throw DomainError("pass --seq, or --lo and --hi to enumerate sequences");
      seqs = seq_enumerate(a, Heart::half(), c.max_len, c.klr, DegreeWindow{*c.lo, *c.hi});
    }
    return out_top(c, polyrep_series(a, seqs, c.depth), out);
  }
  throw UsageError("unknown series kind '" + kind + "'");
}

void cmd_genmap(const std::string& kind, const Config& c, std::ostream& out) {
  require_format(c, {"json"});
  if (kind == "psi") return emit(c, dump(to_json(psi_alpha())), out);
  if (kind == "psin") return emit(c, dump(to_json(psi_alpha_n(c.n))), out);
  if (kind == "phi") return emit(c, dump(to_json(phi_transition(c.n))), out);
  if (kind == "check-compat") {
    Json rows = Json::array();
    bool all = true;
    for (int n = 2; n <= c.n_max; ++n) {
      const bool ok = compose_genmaps(phi_transition(n), psi_alpha_n(n)) == psi_alpha_n(n - 1);
      const auto m = per_degree_matrix(phi_transition(n));
      const Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      all = all && ok && det == 1;
      rows.push_back(Json{{"n", n}, {"commutes", ok}, {"det", to_json(det)}});
    }
    emit(c, dump(Json{{"pass", all}, {"checks", rows}}), out);
    if (!all) throw DomainError("compatibility check failed");
    return;
  }
  throw UsageError("unknown genmap kind '" + kind + "'");
}

int cmd_verify(const Config& c, std::ostream& out) {
  require_format(c, {"json"});
  const auto results = run_verify(c.suite, c.seed);
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    checks.push_back(Json{{"suite", r.suite}, {"check", r.check}, {"topic", r.topic}, {"pass", r.pass}, {"detail", r.detail}});
  }
  emit(c, dump(Json{{"suite", c.suite}, {"seed", c.seed}, {"pass", all}, {"checks", checks}}), out);
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cell posets, PBW diagrams and graded dimensions for coherent sheaves on the projective line"};
  app.name("steinberg");
  app.require_subcommand(1);
  Config c;

  auto fmt = [&](CLI::App* s) { s->add_option("--format", c.format, "json, csv, dot or text, depending on the command"); };
  auto outp = [&](CLI::App* s) { s->add_option("--output,-o", c.output, "write to this file instead of stdout"); };

  auto* kc = app.add_subcommand("kclass", "class data: positivity, tilt, Euler form");
  kc->add_option("--class", c.cls, "r,d")->required();
  kc->add_option("--with", c.with, "second class r,d for the Euler form and slope comparison");
  kc->add_option("--heart", c.heart, "half or nu:N");
  fmt(kc);
  outp(kc);

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan types in a window");
  hn->add_option("--class", c.cls, "r,d")->required();
  hn->add_option("--window", c.window, "window index m >= 1");
  hn->add_flag("--bundles", c.bundles, "list bundle-plus-torsion splittings instead");
  fmt(hn);
  outp(hn);

  auto* wp = app.add_subcommand("wposet", "cell matrices and their Hasse diagram");
  wp->add_option("--alpha", c.alpha, "total class r,d (checked against the rows)");
  wp->add_option("--rows", c.rows, "row sums r,d;r,d;...");
  wp->add_option("--cols", c.cols, "column sums r,d;r,d;...");
  wp->add_option("--heart", c.heart, "half or nu:N");
  wp->add_option("--window", c.window, "window index m >= 1");
  wp->add_option("--slope-bound", c.slope_bound, "bundle entries (r,d) need d >= -B r");
  wp->add_option("--degree-bound", c.degree_bound, "bundle entries (r,d) need d >= -B");
  wp->add_flag("--klr", c.klr, "require rows and columns of the form (1,l) or (0,1)");
  wp->add_flag("--n0", c.n0, "also report the stable quiver heart index");
  wp->add_option("--probe", c.probe, "stability probe length for --n0");
  wp->add_option("--n-max", c.n_max, "largest heart index tried by --n0");
  fmt(wp);
  outp(wp);

  auto* pb = app.add_subcommand("pbw-seq", "split, cross and merge sequence and crossing diagram");
  pb->add_option("--matrix", c.matrix_file, "matrix JSON file");
  pb->add_option("--entries", c.entries, "inline matrix, e.g. \"2,0 0,0;0,0 2,0\"");
  fmt(pb);
  outp(pb);

  auto* se = app.add_subcommand("series", "Poincare series");
  std::string series_kind;
  se->add_option("kind", series_kind, "coh, trunc, stratum, schur or polyrep")->required();
  se->add_option("--class", c.cls, "r,d");
  se->add_option("--window", c.window, "window index m >= 1");
  se->add_option("--cutoff", c.cutoff, "highest half-degree")->check(CLI::NonNegativeNumber);
  se->add_option("--depth", c.depth, "number of homological coefficients")->check(CLI::PositiveNumber);
  se->add_option("--matrix", c.matrix_file, "matrix JSON file");
  se->add_option("--entries", c.entries, "inline matrix");
  se->add_option("--rows", c.rows, "row sums");
  se->add_option("--cols", c.cols, "column sums");
  se->add_option("--slope-bound", c.slope_bound, "bundle entries (r,d) need d >= -B r");
  se->add_option("--degree-bound", c.degree_bound, "bundle entries (r,d) need d >= -B");
  se->add_option("--seq", c.seqs, "sequence r,d;r,d (repeatable)");
  se->add_option("--lo", c.lo, "lowest degree of (1,l) parts, or lowest slope");
  se->add_option("--hi", c.hi, "highest degree of (1,l) parts, or highest slope");
  se->add_option("--max-len", c.max_len, "longest enumerated sequence");
  se->add_flag("--klr", c.klr, "restrict to (1,l) and (0,1) parts");
  fmt(se);
  outp(se);

  auto* gm = app.add_subcommand("genmap", "generator-level ring maps");
  std::string genmap_kind;
  gm->add_option("kind", genmap_kind, "psi, psin, phi or check-compat")->required();
  gm->add_option("--n", c.n, "heart index");
  gm->add_option("--n-max", c.n_max, "last index for check-compat");
  fmt(gm);
  outp(gm);

  auto* ve = app.add_subcommand("verify", "built-in checks");
  ve->add_option("suite", c.suite, "paper-example, heinloth, diagram, poset, genmap or all");
  ve->add_option("--seed", c.seed, "seed for randomized checks");
  fmt(ve);
  outp(ve);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*kc) cmd_kclass(c, out);
    else if (*hn) cmd_hn(c, out);
    else if (*wp) cmd_wposet(c, out);
    else if (*pb) cmd_pbw(c, out);
    else if (*se) cmd_series(series_kind, c, out);
    else if (*gm) cmd_genmap(genmap_kind, c, out);
    else if (*ve) return cmd_verify(c, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace steinberg::cli
