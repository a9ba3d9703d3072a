#include "pointex/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "pointex/geometry.hpp"

namespace pointex {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

// ------------------------------------------------------------ file format

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Located {
  std::string text;
  std::size_t line;
  std::size_t col;  // 1-based column of text[0]
};

[[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what);
}

// Splits on `sep`, keeping the column of every trimmed piece.
std::vector<Located> split_located(const std::string& s, char sep, std::size_t line, std::size_t col0) {
  std::vector<Located> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) end = s.size();
    std::string piece = s.substr(start, end - start);
    std::size_t lead = piece.find_first_not_of(" \t\r");
    if (lead != std::string::npos) out.push_back({trim(piece), line, col0 + start + lead});
    start = end + 1;
  }
  return out;
}

// Rewrites a parser message "col N: ..." relative to the whole line.
[[noreturn]] void rethrow_located(const InputError& e, const Located& where) {
  static const std::regex col(R"(^col (\d+): (.*)$)");
  std::smatch m;
  std::string what = e.what();
  if (std::regex_match(what, m, col)) fail_at(where.line, where.col + std::stoul(m[1]) - 1, m[2]);
  fail_at(where.line, where.col, what);
}

}  // namespace

PresentationFile parse_presentation_file(const std::string& text) {
  static const std::regex key_line(R"(^\s*([A-Za-z_]+)\s*:(.*)$)");
  std::optional<Located> field_v, vars_v, weight_v;
  std::vector<Located> relations;
  std::vector<std::vector<Located>> skew_rows;
  std::string section;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, key_line)) {
      std::string key = m[1];
      std::string value = m[2];
      std::size_t vcol = static_cast<std::size_t>(m.position(2)) + 1;
      std::size_t lead = value.find_first_not_of(" \t\r");
      Located v{trim(value), lineno, vcol + (lead == std::string::npos ? 0 : lead)};
      if (key == "field" || key == "vars" || key == "weight") {
        if (v.text.empty()) fail_at(lineno, vcol, "'" + key + "' needs a value");
        auto& slot = key == "field" ? field_v : key == "vars" ? vars_v : weight_v;
        if (slot) fail_at(lineno, 1, "duplicate '" + key + "'");
        slot = v;
        section.clear();
      } else if (key == "relations" || key == "skew") {
        section = key;
        if (!v.text.empty()) {
          if (key == "relations") {
            for (Located& r : split_located(value, ';', lineno, vcol)) relations.push_back(r);
          } else {
            fail_at(lineno, v.col, "skew rows go on the following lines");
          }
        }
      } else {
        fail_at(lineno, 1, "unknown key '" + key + "'");
      }
      continue;
    }
    if (section == "relations") {
      for (Located& r : split_located(line, ';', lineno, 1)) relations.push_back(r);
    } else if (section == "skew") {
      std::string row = line;
      std::replace(row.begin(), row.end(), '\t', ' ');
      std::vector<Located> entries;
      for (const Located& piece : split_located(row, ',', lineno, 1))
        for (const Located& e : split_located(piece.text, ' ', lineno, piece.col)) entries.push_back(e);
      skew_rows.push_back(std::move(entries));
    } else {
      fail_at(lineno, 1, "expected 'key: value'");
    }
  }

  Field field;
  if (field_v) {
    try {
      field = Field::parse(field_v->text);
    } catch (const InputError& e) {
      fail_at(field_v->line, field_v->col, e.what());
    }
  }
  if (!vars_v) throw InputError("line " + std::to_string(lineno) + ", col 1: missing 'vars'");
  std::vector<std::string> names;
  static const std::regex ident(R"(^[A-Za-z_][A-Za-z_0-9]*$)");
  for (const Located& v : split_located(vars_v->text, ',', vars_v->line, vars_v->col)) {
    if (!std::regex_match(v.text, ident)) fail_at(v.line, v.col, "invalid variable name '" + v.text + "'");
    names.push_back(v.text);
  }
  unsigned weight = 1;
  if (weight_v) {
    try {
      std::size_t used = 0;
      unsigned long w = std::stoul(weight_v->text, &used);
      if (used != weight_v->text.size() || w == 0 || w > 64) throw std::invalid_argument("weight");
      weight = static_cast<unsigned>(w);
    } catch (const std::exception&) {
      fail_at(weight_v->line, weight_v->col, "weight must be a positive integer");
    }
  }

  PresentationFile out;
  std::vector<NCPoly> rels;
  if (!skew_rows.empty()) {
    const std::size_t n = names.size();
    if (skew_rows.size() != n)
      fail_at(skew_rows.back().front().line, 1, "skew matrix needs " + std::to_string(n) + " rows");
    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (skew_rows[i].size() != n)
        fail_at(skew_rows[i].front().line, 1, "skew row needs " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        try {
          q(i, j) = Scalar::parse(skew_rows[i][j].text, field);
        } catch (const InputError& e) {
          fail_at(skew_rows[i][j].line, skew_rows[i][j].col, e.what());
        }
      }
    }
    try {
      rels = Presentation::skew(field, names, q).relations();
    } catch (const InputError& e) {
      fail_at(skew_rows.front().front().line, 1, e.what());
    }
    out.skew = q;
  }
  for (const Located& r : relations) {
    NCPoly p;
    try {
      p = NCPoly::parse(r.text, names, field);
    } catch (const InputError& e) {
      rethrow_located(e, r);
    }
    if (p.is_zero()) fail_at(r.line, r.col, "relation is zero");
    if (!p.is_homogeneous()) fail_at(r.line, r.col, "relation is not homogeneous");
    if (p.length() != 2) fail_at(r.line, r.col, "relation is not quadratic");
    rels.push_back(std::move(p));
  }
  try {
    out.presentation = Presentation(field, names, std::move(rels), weight);
  } catch (const InputError& e) {
    fail_at(vars_v->line, vars_v->col, e.what());
  }
  return out;
}

PresentationFile read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation_file(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "field: " + p.field().to_string() + "\n";
  out += "vars: ";
  for (std::size_t i = 0; i < p.n(); ++i) out += (i ? ", " : "") + p.names()[i];
  out += "\n";
  if (p.weight() != 1) out += "weight: " + std::to_string(p.weight()) + "\n";
  out += "relations:\n";
  for (const NCPoly& r : p.relations()) out += "  " + r.to_string(p.names()) + "\n";
  return out;
}

// ------------------------------------------------------------ rendering

namespace {

struct Ctx {
  const PresentationFile& file;
  const RunConfig& cfg;
  Algebra base;
  std::vector<std::string> names;
};

ordered poly_list(const Ctx& c, const std::vector<CommPoly>& ps) {
  ordered out = ordered::array();
  for (const CommPoly& p : ps) out.push_back(p.to_string(c.names, c.cfg.order));
  return out;
}

ordered point_json(const ProjPoint& p) {
  ordered out = ordered::array();
  for (const Scalar& s : p.coords()) out.push_back(s.to_string());
  return out;
}

ordered matrix_json(const Matrix& m) {
  ordered out = ordered::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered row = ordered::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(r, k).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

ordered forms_json(const Ctx& c, const LinearFormMatrix& m) {
  ordered out = ordered::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered row = ordered::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.entry(r, k).to_string(c.names, c.cfg.order));
    out.push_back(std::move(row));
  }
  return out;
}

// Differentials as written for the module side: left complexes are
// transposed and their words read back in the original algebra.
ordered differential_json(const FreeComplex& fc, std::size_t i) {
  const FreeModuleMap& d = fc.d(i);
  const Algebra& a = fc.algebra;
  const auto& names = a.presentation().names();
  auto render = [&](const Element& e) {
    if (e.coords.empty() || e.is_zero()) return std::string("0");
    NCPoly p = a.lift(e);
    return (fc.side == Side::Left ? p.reversed() : p).to_string(names);
  };
  ordered out = ordered::array();
  if (fc.side == Side::Right) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      ordered row = ordered::array();
      for (std::size_t k = 0; k < d.cols(); ++k) row.push_back(render(d.at(r, k)));
      out.push_back(std::move(row));
    }
  } else {
    for (std::size_t k = 0; k < d.cols(); ++k) {
      ordered row = ordered::array();
      for (std::size_t r = 0; r < d.rows(); ++r) row.push_back(render(d.at(r, k)));
      out.push_back(std::move(row));
    }
  }
  return out;
}

ordered verification_json(const VerificationReport& r) {
  ordered failures = ordered::array();
  for (const HomologyCheck& h : r.checks)
    if (!h.exact())
      failures.push_back({{"index", h.index}, {"degree", h.degree}, {"kernel", h.kernel}, {"image", h.image}});
  return {{"cap", r.cap},
          {"composites_zero", r.composites_zero},
          {"exact", r.exact},
          {"minimal", r.minimal},
          {"checks", r.checks.size()},
          {"nonzero_composites", r.nonzero_composites},
          {"scalar_entries", r.scalar_entries},
          {"homology_failures", std::move(failures)}};
}

ordered algebra_json(const Algebra& a, std::size_t hilbert_top) {
  const Presentation& p = a.presentation();
  ordered rels = ordered::array();
  for (const NCPoly& r : p.relations()) rels.push_back(r.to_string(p.names()));
  ordered hilbert = ordered::array();
  for (std::size_t d = 0; d <= hilbert_top; ++d) hilbert.push_back(a.dim(d));
  return {{"field", p.field().to_string()},
          {"variables", p.names()},
          {"weight", p.weight()},
          {"relations", std::move(rels)},
          {"hilbert", std::move(hilbert)}};
}

std::vector<Side> sides_of(const RunConfig& cfg) {
  if (cfg.side == "right") return {Side::Right};
  if (cfg.side == "left") return {Side::Left};
  if (cfg.side == "both") return {Side::Right, Side::Left};
  throw InputError("side must be right, left or both");
}

ordered complex_json(const FreeComplex& fc, const VerificationReport& rep) {
  ordered diffs = ordered::array();
  for (std::size_t i = 1; i <= fc.length(); ++i) diffs.push_back(differential_json(fc, i));
  return {{"ranks", fc.ranks()}, {"differentials", std::move(diffs)}, {"verification", verification_json(rep)}};
}

ordered point_variety_json(const Ctx& c, const PointVarietyIdeal& pv) {
  return {{"n", pv.n},
          {"r", pv.r},
          {"matrix", forms_json(c, pv.matrix)},
          {"minor_count", pv.minors.size()},
          {"ideal", poly_list(c, pv.ideal.generators())},
          {"whole_space", pv.ideal.is_zero()}};
}

ordered point_exact_json(const PointExactReport& r) {
  ordered degrees = ordered::array();
  for (const DegreeEvidence& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"target_rank", d.target_rank},
                       {"upper", d.upper},
                       {"lower", d.lower},
                       {"holds", d.holds()},
                       {"failed_minor", d.failed_minor.empty() ? ordered(nullptr) : ordered(d.failed_minor)}});
  return {{"side", side_name(r.side)}, {"max_degree", r.max_degree}, {"verdict", r.verdict}, {"degrees", std::move(degrees)}};
}

// Working algebra: the file's algebra, or its quotient by --element.
struct Work {
  Algebra algebra;
  std::string method;
  Resolutions res;
  ordered quotient;  // element data when a quotient was taken
};

ordered element_info(const Ctx& c, const Element& f) {
  const Algebra& a = c.base;
  auto sigma = a.is_normal(f);
  const std::size_t top = c.cfg.cap / a.presentation().weight();
  bool regular = a.is_regular_up_to(f, top);
  return {{"element", a.to_string(f)},
          {"degree", f.length * a.presentation().weight()},
          {"normal", static_cast<bool>(sigma)},
          {"automorphism", sigma ? matrix_json(sigma->matrix) : ordered(nullptr)},
          {"regular_up_to", top},
          {"regular", regular}};
}

Element parse_element(const Ctx& c) {
  if (c.cfg.element.empty()) throw InputError("this subcommand needs --element");
  try {
    return c.base.parse(c.cfg.element);
  } catch (const InputError& e) {
    throw InputError(std::string("--element: ") + e.what());
  }
}

Work prepare(const Ctx& c, std::size_t length) {
  if (c.cfg.element.empty()) return Work{c.base, "linear", resolve_both(c.base, length), nullptr};
  Element f = parse_element(c);
  ordered info = element_info(c, f);
  if (info["normal"].get<bool>() && info["regular"].get<bool>()) {
    Resolutions r = shamash_both(c.base, f, length, c.cfg.cap);
    Algebra b = r.algebra;
    return Work{b, "shamash", std::move(r), std::move(info)};
  }
  Algebra b = c.base.quotient(f);
  return Work{b, "linear", resolve_both(b, length), std::move(info)};
}

ordered working_header(const Work& w, std::size_t hilbert_top) {
  ordered out = {{"algebra", algebra_json(w.algebra, hilbert_top)}, {"method", w.method}};
  if (!w.quotient.is_null()) out["quotient_by"] = w.quotient;
  return out;
}

std::vector<ProjPoint> grid_points_on(const Ideal& e, std::size_t n, const Field& field, std::size_t limit) {
  std::vector<ProjPoint> out;
  std::vector<long> digits(n, -2);
  while (out.size() < limit) {
    std::size_t first = 0;
    while (first < n && digits[first] == 0) ++first;
    if (first < n && digits[first] == 1) {
      std::vector<Scalar> v;
      for (long d : digits) v.push_back(Scalar::from_rational(d, field));
      ProjPoint p(v);
      if (std::all_of(e.generators().begin(), e.generators().end(),
                      [&](const CommPoly& g) { return g.evaluate(p.coords()).is_zero(); }))
        out.push_back(p);
    }
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == 2) digits[--k] = -2;
    if (k == 0) break;
    ++digits[k - 1];
  }
  return out;
}

// Every point with coordinates in {-1, 0, 1} on exactly one of the two varieties.
ordered separating_points(const SemiStandardReport& s, const Field& field) {
  ordered out = ordered::array();
  const std::size_t n = s.right.n;
  std::vector<long> digits(n, -1);
  while (true) {
    std::size_t first = 0;
    while (first < n && digits[first] == 0) ++first;
    if (first < n && digits[first] == 1) {
      std::vector<Scalar> v;
      for (long d : digits) v.push_back(Scalar::from_rational(d, field));
      ProjPoint p(v);
      bool on_right = on_point_variety(s.right, p), on_left = on_point_variety(s.left, p);
      if (on_right != on_left) out.push_back({{"point", point_json(p)}, {"on", on_right ? "right" : "left"}});
    }
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == 1) digits[--k] = -1;
    if (k == 0) break;
    ++digits[k - 1];
  }
  return out;
}

ordered semi_json(const Ctx& c, const SemiStandardReport& s, const Field& field) {
  ordered out = {{"semi_standard", s.semi_standard},
                 {"witness", s.witness ? point_json(*s.witness) : ordered(nullptr)}};
  if (!s.semi_standard) out["separating_unit_points"] = separating_points(s, field);
  out["right"] = point_variety_json(c, s.right);
  out["left"] = point_variety_json(c, s.left);
  return out;
}

ordered g1_json(const Ctx& c, const Work& w, const G1Report& g) {
  ordered out = {{"holds", g.holds},
                 {"semi_standard", g.semi.semi_standard},
                 {"witness", g.semi.witness ? point_json(*g.semi.witness) : ordered(nullptr)},
                 {"point_exact_degree_1",
                  {{"right", g.right_degree_one.verdict}, {"left", g.left_degree_one.verdict}}},
                 {"r_plus_one_at_least_n", g.r_plus_one_at_least_n}};
  if (g.pair) {
    out["E"] = poly_list(c, g.pair->e.generators());
    out["E_is_whole_space"] = g.pair->e.is_zero();
    ordered table = ordered::array();
    for (const ProjPoint& p : grid_points_on(g.pair->e, g.pair->n, w.algebra.field(), 8))
      table.push_back({{"p", point_json(p)}, {"sigma", point_json(sigma_at(*g.pair, p))}});
    out["sigma_samples"] = std::move(table);
  }
  return out;
}

std::size_t check_length(const RunConfig& cfg) {
  if (cfg.length == 0) throw InputError("length must be at least 1");
  return cfg.length;
}

// ------------------------------------------------------------ subcommands

ordered run_resolve(const Ctx& c) {
  const std::size_t L = check_length(c.cfg);
  Work w = prepare(c, L);
  ordered out = working_header(w, L);
  for (Side s : sides_of(c.cfg)) {
    const FreeComplex& fc = s == Side::Right ? w.res.right : w.res.left;
    const auto& stored = s == Side::Right ? w.res.right_report : w.res.left_report;
    VerificationReport rep = stored && stored->cap == c.cfg.cap ? *stored : verify_complex(fc, c.cfg.cap);
    out[side_name(s)] = complex_json(fc, rep);
  }
  return out;
}

ordered run_point_variety(const Ctx& c) {
  Work w = prepare(c, 2);
  ordered out = working_header(w, 3);
  out.update(semi_json(c, is_semi_standard(w.res, c.cfg.seed), w.algebra.field()));
  return out;
}

ordered run_g1(const Ctx& c) {
  Work w = prepare(c, 2);
  ordered out = working_header(w, 3);
  out["g1"] = g1_json(c, w, check_g1(w.res, c.cfg.seed));
  return out;
}

ordered run_point_exact(const Ctx& c) {
  Work w = prepare(c, c.cfg.max_degree + 1);
  ordered out = working_header(w, 3);
  bool all = true;
  for (Side s : sides_of(c.cfg)) {
    PointExactReport r = check_point_exact(w.res, s, c.cfg.max_degree);
    all = all && r.verdict;
    out[side_name(s)] = point_exact_json(r);
  }
  out["verdict"] = all;
  return out;
}

ordered run_quotient(const Ctx& c) {
  Element f = parse_element(c);
  Algebra b = c.base.quotient(f);
  ordered out = element_info(c, f);
  out["presentation"] = serialize_presentation(b.presentation());
  out["algebra"] = algebra_json(b, check_length(c.cfg));
  return out;
}

ordered run_shamash(const Ctx& c) {
  const std::size_t L = check_length(c.cfg);
  Element f = parse_element(c);
  ordered out = element_info(c, f);
  for (Side s : sides_of(c.cfg)) {
    FreeComplex p = linear_resolution(c.base, s, L);
    Element g = s == Side::Right ? f : p.algebra.reduce(c.base.lift(f).reversed());
    ShamashResult r = shamash(p, g, L, c.cfg.cap);
    ordered side = complex_json(r.complex, r.report);
    std::vector<std::size_t> expected;
    std::vector<std::size_t> ps = p.ranks();
    for (std::size_t i = 0; i <= L; ++i) {
      std::size_t e = 0;
      for (std::size_t k = 0; 2 * k <= i; ++k) e += ps[i - 2 * k];
      expected.push_back(e);
    }
    side["ambient_ranks"] = ps;
    side["expected_ranks"] = expected;
    std::size_t checked = 0, held = 0;
    for (std::size_t n = 1; 2 * n <= L; ++n)
      for (std::size_t l = 0; l + 2 * n <= L; ++l) {
        FreeModuleMap sum = tower_identity_sum(p, r.tower, n, l);
        bool ok = n == 1 ? sum == diagonal_map(p.algebra, p.shifts(l), g) : sum.is_zero();
        ++checked;
        held += ok;
      }
    side["homotopy_identities"] = {{"checked", checked}, {"held", held}};
    out[side_name(s)] = std::move(side);
    if (s == Side::Right) out["algebra"] = algebra_json(r.quotient, L);
  }
  return out;
}

ordered run_sigma(const Ctx& c) {
  if (c.cfg.point.empty()) throw InputError("sigma needs --point");
  const std::size_t L = check_length(c.cfg);
  Work w = prepare(c, std::max<std::size_t>(L, 2));
  ProjPoint p = ProjPoint::parse(c.cfg.point, w.algebra.field());
  if (p.size() != w.algebra.n()) throw InputError("--point needs " + std::to_string(w.algebra.n()) + " coordinates");
  G1Report g = check_g1(w.res, c.cfg.seed);
  if (!g.holds) throw InputError("the algebra does not satisfy the (G1) condition, so sigma is undefined");
  ordered out = working_header(w, 3);
  out["point"] = point_json(p);
  out["sigma"] = point_json(sigma_at(*g.pair, p));
  PointwiseReport pw = pointwise_complex_exact(w.res, *g.pair, p, L);
  ordered orbit = ordered::array();
  for (const ProjPoint& q : pw.orbit) orbit.push_back(point_json(q));
  out["orbit"] = std::move(orbit);
  out["pointwise"] = {{"length", L}, {"exact", pw.exact}, {"ranks", pw.ranks},
                      {"reason", pw.reason.empty() ? ordered(nullptr) : ordered(pw.reason)}};
  return out;
}

ordered run_report(const Ctx& c) {
  const std::size_t L = std::max(check_length(c.cfg), c.cfg.max_degree + 1);
  Work w = prepare(c, L);
  ordered out = working_header(w, L);
  ordered resolutions;
  for (Side s : {Side::Right, Side::Left}) {
    const FreeComplex& fc = s == Side::Right ? w.res.right : w.res.left;
    const auto& stored = s == Side::Right ? w.res.right_report : w.res.left_report;
    VerificationReport rep = stored && stored->cap == c.cfg.cap ? *stored : verify_complex(fc, c.cfg.cap);
    resolutions[side_name(s)] = {{"ranks", fc.ranks()}, {"verification", verification_json(rep)}};
  }
  out["resolutions"] = std::move(resolutions);
  G1Report g = check_g1(w.res, c.cfg.seed);
  out["point_varieties"] = semi_json(c, g.semi, w.algebra.field());
  out["g1"] = g1_json(c, w, g);
  ordered pe;
  for (Side s : {Side::Right, Side::Left}) pe[side_name(s)] = point_exact_json(check_point_exact(w.res, s, c.cfg.max_degree));
  out["point_exact"] = std::move(pe);
  return out;
}

// ------------------------------------------------------------ plain text

bool is_flat(const ordered& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const ordered& e) { return !e.is_array() && !e.is_object(); });
}

std::string scalar_text(const ordered& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_array()) {
    std::string s;
    for (const ordered& e : j) s += (s.empty() ? "" : ", ") + scalar_text(e);
    return "[" + s + "]";
  }
  return j.dump();
}

void render_text(const ordered& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items())
      if (is_flat(v)) width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v) && !(v.is_string() && v.get<std::string>().find('\n') != std::string::npos)) {
        out += pad + k + std::string(width - k.size(), ' ') + "  " + scalar_text(v) + "\n";
      } else if (v.is_string()) {
        out += pad + k + ":\n";
        std::istringstream lines(v.get<std::string>());
        for (std::string l; std::getline(lines, l);) out += pad + "  " + l + "\n";
      } else {
        out += pad + k + ":\n";
        render_text(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const ordered& e : j) {
      if (is_flat(e)) {
        out += pad + scalar_text(e) + "\n";
      } else {
        out += pad + "-\n";
        render_text(e, indent + 2, out);
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"resolve", "point-variety", "check-g1", "check-point-exact",
                                                 "quotient", "shamash", "sigma", "report"};
  return names;
}

RunOutput run_pipeline(const PresentationFile& file, const std::string& subcommand, const RunConfig& cfg) {
  Ctx c{file, cfg, Algebra(file.presentation), file.presentation.names()};
  sides_of(cfg);
  ordered results;
  if (subcommand == "resolve") results = run_resolve(c);
  else if (subcommand == "point-variety") results = run_point_variety(c);
  else if (subcommand == "check-g1") results = run_g1(c);
  else if (subcommand == "check-point-exact") results = run_point_exact(c);
  else if (subcommand == "quotient") results = run_quotient(c);
  else if (subcommand == "shamash") results = run_shamash(c);
  else if (subcommand == "sigma") results = run_sigma(c);
  else if (subcommand == "report") results = run_report(c);
  else throw InputError("unknown subcommand '" + subcommand + "'");

  ordered config = {{"subcommand", subcommand},
                    {"length", cfg.length},
                    {"cap", cfg.cap},
                    {"order", cfg.order.name()},
                    {"side", cfg.side},
                    {"seed", cfg.seed},
                    {"element", cfg.element.empty() ? ordered(nullptr) : ordered(cfg.element)},
                    {"point", cfg.point.empty() ? ordered(nullptr) : ordered(cfg.point)},
                    {"max_degree", cfg.max_degree},
                    {"presentation", serialize_presentation(file.presentation)}};
  ordered doc = {{"tool_version", kToolVersion}, {"schema", kReportSchema}, {"config", config}, {"results", results}};
  RunOutput out;
  out.json = doc.dump(2) + "\n";
  out.text = "pointex " + std::string(kToolVersion) + "  " + subcommand + "\n";
  render_text(results, 0, out.text);
  return out;
}

}  // namespace pointex
