#include "fano/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/classify.hpp"
#include "fano/cones.hpp"
#include "fano/error.hpp"
#include "fano/io.hpp"
#include "fano/modseq.hpp"
#include "fano/numthy.hpp"

namespace fano {

namespace {

using nlohmann::json;

json point_json(LatticeVector v) { return json::array({v.x, v.y}); }

json points_json(const std::vector<LatticeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(point_json(v));
  return out;
}

json cqs_json(const std::optional<CyclicQuotientSingularity>& q) {
  if (!q) return nullptr;
  return json::array({q->r, q->s});
}

std::string rational_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

class Style {
 public:
  explicit Style(bool color) : color_(color) {}
  std::string bold(const std::string& s) const {
    return color_ ? "\x1b[1m" + s + "\x1b[0m" : s;
  }

 private:
  bool color_;
};

std::string reflexivity_text(const std::optional<Int>& l) {
  return l ? std::to_string(*l) + "-reflexive" : "not l-reflexive";
}

// ---- content ----------------------------------------------------------

struct ConeRow {
  Cone cone;
  ConeMetrics metrics;
  ConeClass cls;
};

int cmd_content(const std::string& path, const std::string& format,
                std::ostream& out, const Style& style) {
  const auto doc = parse_polygon(read_file(path));
  const FanoPolygon p = validate_polygon(doc.vertices);
  const auto sc = polygon_singularity_content(p);
  const auto l = l_reflexive_index(p);

  std::vector<ConeRow> rows;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Cone c = edge_cone(p, i);
    rows.push_back({c, cone_metrics(c), classify_cone(c)});
  }

  if (format == "json") {
    json cones = json::array();
    for (const auto& row : rows) {
      cones.push_back({{"rays", json::array({point_json(row.cone.ray1()),
                                             point_json(row.cone.ray2())})},
                       {"det", row.cone.determinant()},
                       {"length", row.metrics.length},
                       {"height", row.metrics.height},
                       {"class", std::string(to_string(row.cls.tag))},
                       {"n", row.cls.n},
                       {"residual", cqs_json(row.cls.residual)}});
    }
    json basket = json::array();
    for (const auto& q : sc.basket) basket.push_back(json::array({q.r, q.s}));
    json doc_out = {{"vertices", points_json(p.vertices())},
                    {"singularity_content", {{"n", sc.n}, {"basket", basket}}},
                    {"cones", cones},
                    {"l_reflexive_index", l ? json(*l) : json(nullptr)}};
    if (doc.name) doc_out["name"] = *doc.name;
    out << compact_pairs(doc_out.dump(2)) << '\n';
    return kExitOk;
  }

  if (format == "csv") {
    out << "cone,ray1_x,ray1_y,ray2_x,ray2_y,det,length,height,class,n,residual\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      out << i + 1 << ',' << row.cone.ray1().x << ',' << row.cone.ray1().y << ','
          << row.cone.ray2().x << ',' << row.cone.ray2().y << ','
          << row.cone.determinant() << ',' << row.metrics.length << ','
          << row.metrics.height << ',' << to_string(row.cls.tag) << ','
          << row.cls.n << ','
          << (row.cls.residual ? to_string(*row.cls.residual) : "") << '\n';
    }
    return kExitOk;
  }

  out << style.bold("SC = " + to_string(sc) + "; " + reflexivity_text(l)) << '\n';
  if (doc.name) out << "name: " << *doc.name << '\n';
  out << '\n';
  out << style.bold("cone  ray1        ray2        det  length  height  class        n  residual")
      << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out << std::left << std::setw(6) << i + 1 << std::setw(12)
        << to_string(row.cone.ray1()) << std::setw(12) << to_string(row.cone.ray2())
        << std::setw(5) << row.cone.determinant() << std::setw(8)
        << row.metrics.length << std::setw(8) << row.metrics.height << std::setw(13)
        << to_string(row.cls.tag) << std::setw(3) << row.cls.n
        << (row.cls.residual ? to_string(*row.cls.residual) : "-") << '\n';
  }
  out << std::right;
  return kExitOk;
}

// ---- winding ----------------------------------------------------------

int cmd_winding(const std::string& path, const std::string& format,
                std::ostream& out, const Style& style) {
  const auto seq = build_sequence(parse_sequence(read_file(path)));
  const Int formula = winding_from_formula(seq);
  const Int geometric = geometric_winding(seq.vectors());
  const Rational residual = twelve_point_residual(seq);

  if (format == "json") {
    json doc = {{"vectors", points_json(seq.vectors())},
                {"r", seq.r()},
                {"eps", seq.eps()},
                {"coeffs", seq.coeffs()},
                {"winding_formula", formula},
                {"winding_geometric", geometric},
                {"twelve_point_residual", rational_string(residual)}};
    out << compact_pairs(doc.dump(2)) << '\n';
    return kExitOk;
  }

  out << style.bold("r = " + std::to_string(seq.r()) +
                    ", k = " + std::to_string(seq.size()))
      << '\n';
  out << std::left << std::setw(5) << "i" << std::setw(14) << "v_i" << std::setw(7)
      << "eps_i"
      << "a_i\n";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out << std::setw(5) << i + 1 << std::setw(14) << to_string(seq.vectors()[i])
        << std::setw(7) << seq.eps()[i] << seq.coeffs()[i] << '\n';
  }
  out << std::right;
  out << "winding (formula)   = " << formula << '\n'
      << "winding (geometric) = " << geometric << '\n'
      << "twelve-point residual = " << rational_string(residual) << '\n';
  return kExitOk;
}

// ---- family / predicate ----------------------------------------------

int cmd_family(const std::string& id, Int r, Int s, std::ostream& out,
               std::ostream& err) {
  const auto f = parse_family(id);
  if (!f) {
    err << "unknown family '" << id << "'; expected one of";
    for (FamilyId g : kAllFamilies) err << ' ' << to_string(g);
    err << '\n';
    return kExitInvalid;
  }
  family_polygon(*f, r, s);  // validates at these parameters
  PolygonDocument doc;
  doc.name = std::string(to_string(*f)) + " r=" + std::to_string(r) +
             " s=" + std::to_string(s);
  doc.vertices = family_vertices(*f, r, s);
  out << polygon_to_json(doc) << '\n';
  return kExitOk;
}

int cmd_predicate(Int k, Int r, Int s, std::ostream& out) {
  out << describe(existence_predicate(k, r, s), r) << '\n';
  return kExitOk;
}

// ---- census -----------------------------------------------------------

int cmd_census(Int r_max, unsigned jobs, const std::string& format,
               std::ostream& out, std::ostream& err) {
  const auto report = verify_theorem_1_7(r_max, {jobs});

  if (format == "csv") {
    out << "r,k,s,count\n";
    for (const auto& row : report.rows) {
      out << row.r << ',' << row.k << ',' << row.s << ',' << row.polygon_count << '\n';
    }
  } else {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json models = json::array();
      for (const auto& m : row.canonical_models) models.push_back(points_json(m));
      rows.push_back({{"r", row.r},
                      {"k", row.k},
                      {"s", row.s},
                      {"count", row.polygon_count},
                      {"models", models}});
    }
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
      mismatches.push_back({{"k", m.k},
                            {"r", m.r},
                            {"s", m.s},
                            {"enumerated", m.enumerated},
                            {"predicted", m.predicted}});
    }
    json violations = json::array();
    for (const auto& row : report.uniqueness_violations) {
      violations.push_back(
          {{"r", row.r}, {"k", row.k}, {"s", row.s}, {"count", row.polygon_count}});
    }
    json doc = {{"r_max", report.r_max},
                {"rows", rows},
                {"mismatches", mismatches},
                {"uniqueness_violations", violations},
                {"ok", report.ok()}};
    out << compact_pairs(doc.dump(2)) << '\n';
  }

  for (const auto& m : report.mismatches) {
    err << "mismatch: k=" << m.k << " r=" << m.r << " s=" << m.s
        << " enumerated=" << m.enumerated
        << " predicted=" << (m.predicted ? "true" : "false") << '\n';
  }
  for (const auto& row : report.uniqueness_violations) {
    err << "uniqueness: k=" << row.k << " r=" << row.r << " s=" << row.s
        << " count=" << row.polygon_count << '\n';
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

// ---- verify -----------------------------------------------------------

std::string matches_text(const std::vector<FamilyMatch>& matches) {
  std::string text;
  for (const auto& m : matches) {
    if (!text.empty()) text += ", ";
    text += std::string(to_string(m.family)) + "(s=" + std::to_string(m.s) + ")";
  }
  return text;
}

std::string vertices_text(const std::vector<LatticeVector>& vs) {
  std::string text;
  for (const auto& v : vs) {
    if (!text.empty()) text += ' ';
    text += to_string(v);
  }
  return text;
}

int cmd_verify(Int r, std::ostream& out, const Style& style) {
  if (r == 4) {
    // Outside the family classification: report the enumeration only.
    const auto polygons = enumerate_det_r_fanos(r);
    out << style.bold("r = 4: " + std::to_string(polygons.size()) +
                      " polygon(s) with all cones determinant-4 R-cones")
        << '\n';
    for (const auto& p : polygons) {
      out << "  " << vertices_text(canonical_form(p)) << '\n';
    }
    out << "r = 4 is not covered by the family models; nothing to check\n";
    return kExitOk;
  }
  const auto report = verify_theorem_1_6(r);
  out << style.bold("r = " + std::to_string(r) + ": " +
                    std::to_string(report.polygons.size() + report.orphans.size()) +
                    " polygon(s), " + std::to_string(report.orphans.size()) +
                    " orphan(s)")
      << '\n';
  for (const auto& c : report.polygons) {
    out << "  k=" << c.polygon.size() << "  " << vertices_text(canonical_form(c.polygon))
        << "  <- " << matches_text(c.matches) << '\n';
  }
  for (const auto& p : report.orphans) {
    out << "  ORPHAN k=" << p.size() << "  " << vertices_text(canonical_form(p)) << '\n';
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out,
                std::ostream& err, RunOptions options) {
  const Style style(options.color);
  CLI::App app{"Singularity content, r-modular sequences and Fano polygon "
               "classification checks",
               "fano"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "table";
  Int k = 0;
  Int r = 0;
  Int s = 0;
  Int r_max = 60;
  unsigned jobs = 1;
  std::string family_id;
  int status = kExitOk;

  auto* content = app.add_subcommand("content", "Singularity content of a polygon file");
  content->add_option("FILE", file, "JSON polygon document")->required();
  content->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  auto* winding = app.add_subcommand(
      "winding", "Signs, coefficients, winding number and twelve-point residual");
  winding->add_option("FILE", file, "JSON sequence document")->required();
  winding->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  auto* family = app.add_subcommand("family", "Model polygon of a family as JSON");
  family->add_option("ID", family_id, "k3f1, k4f1..k4f4, k5f1..k5f3 or k6f1")
      ->required();
  family->add_option("--r", r, "Determinant")->required();
  family->add_option("--s", s, "Cone parameter")->required();

  auto* predicate =
      app.add_subcommand("predicate", "Existence of a homogeneous-basket polygon");
  predicate->add_option("--k", k, "Number of vertices")->required();
  predicate->add_option("--r", r, "Determinant")->required();
  predicate->add_option("--s", s, "Basket parameter")->required();

  auto* census = app.add_subcommand(
      "census", "Enumerate homogeneous baskets and compare with the predicate");
  census->add_option("--r-max", r_max, "Largest determinant")->required();
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  census->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify =
      app.add_subcommand("verify", "Match enumerated polygons against the families");
  verify->add_option("--r", r, "Determinant")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (content->parsed()) {
      status = cmd_content(file, format, out, style);
    } else if (winding->parsed()) {
      status = cmd_winding(file, format, out, style);
    } else if (family->parsed()) {
      status = cmd_family(family_id, r, s, out, err);
    } else if (predicate->parsed()) {
      status = cmd_predicate(k, r, s, out);
    } else if (census->parsed()) {
      if (format == "table") format = "json";
      status = cmd_census(r_max, jobs, format, out, err);
    } else if (verify->parsed()) {
      status = cmd_verify(r, out, style);
    }
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.index()) err << " [index " << *e.index() << "]";
    err << '\n';
    return kExitInvalid;
  }
  return status;
}

}  // namespace fano
