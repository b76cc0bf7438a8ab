#include "report.hpp"

#include <sstream>

namespace toric::cli {

namespace {

const Integer json_safe_limit = Integer(1) << 53;

const char* mode_name(BlowupMode m) { return m == BlowupMode::nash ? "nash" : "normalized"; }

json vectors_json(const std::vector<LatticeVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

json subset_json(const Subset& a) {
  json out = json::array();
  for (auto i : a) out.push_back(i + 1);
  return out;
}

json gamma_json(const ChartSpec& c) {
  json out = json::object();
  for (std::size_t k = 0; k < c.subset.size(); ++k)
    out[std::to_string(c.subset[k] + 1)] = vectors_json(c.gamma_sets[k]);
  return out;
}

// --- text rendering -------------------------------------------------------

std::string scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string vector_text(const json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
  return out + ")";
}

std::string matrix_text(const json& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? " " : "") + scalar(m[i][j]);
  }
  return out + "]";
}

std::string subset_text(const json& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + scalar(a[i]);
  return out + "}";
}

std::string vectors_text(const json& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vector_text(vs[i]);
  return out + "}";
}

void numbered(std::ostream& out, const json& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << "  " << (i + 1) << ": " << vector_text(vs[i]) << '\n';
}

std::string monomial_text(const json& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::string e = scalar(exps[i]);
    if (e == "0") continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (e != "1") out += "^" + e;
  }
  return out.empty() ? "1" : out;
}

void render_hilbert(std::ostream& out, const json& r) {
  out << "pointed: " << (r["pointed"].get<bool>() ? "yes" : "no") << '\n';
  out << "saturated: " << (r["saturated"].get<bool>() ? "yes" : "no") << '\n';
  out << "rays (" << r["rays"].size() << "):\n";
  numbered(out, r["rays"]);
  out << "Hilbert basis (" << r["hilbert_basis"].size() << "):\n";
  numbered(out, r["hilbert_basis"]);
}

void render_charts(std::ostream& out, const json& r) {
  out << "Hilbert basis (" << r["hilbert_basis"].size() << "):\n";
  numbered(out, r["hilbert_basis"]);
  std::size_t pointed = 0;
  for (const auto& c : r["charts"]) pointed += c["pointed"].get<bool>();
  out << "charts (char " << scalar(r["characteristic"]) << ", " << scalar(r["mode"])
      << "): " << r["charts"].size() << " listed, " << pointed << " pointed\n";
  for (const auto& c : r["charts"]) {
    out << "A = " << subset_text(c["A"]) << (c["pointed"].get<bool>() ? "  pointed" : "  not pointed");
    if (c.contains("subsets") && c["subsets"].size() > 1) {
      out << "  also from";
      for (std::size_t i = 1; i < c["subsets"].size(); ++i) out << ' ' << subset_text(c["subsets"][i]);
    }
    out << '\n';
    for (const auto& [pivot, g] : c["gamma"].items())
      out << "  G(h" << pivot << ") = " << vectors_text(g) << '\n';
    out << "  generators: " << vectors_text(c["generators"]) << '\n';
  }
}

void render_iso(std::ostream& out, const json& r) {
  const json& iso = r["iso"];
  if (iso["found"].get<bool>())
    out << "isomorphic: U = " << matrix_text(iso["matrix"]) << '\n';
  else
    out << "not isomorphic\n";
}

void render_iterations(std::ostream& out, const json& r) {
  const json& it = r["iterations"];
  for (const auto& w : it["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
  for (const auto& n : it["nodes"]) {
    std::string path = n["path"].get<std::string>();
    out << "node " << n["id"] << "  depth " << n["depth"] << "  " << (path.empty() ? "/" : path)
        << "  " << n["status"].get<std::string>();
    if (!n["iso"].is_null())
      out << ": isomorphic to node " << n["iso"]["ancestor"] << " via U = "
          << matrix_text(n["iso"]["matrix"]);
    out << "  (" << n["hilbert_basis"].size() << " Hilbert basis elements)\n";
  }
  out << "outcome: " << it["outcome"].get<std::string>() << '\n';
}

void render_verification(std::ostream& out, const json& r) {
  const json& v = r["verification"];
  std::size_t failed = 0;
  for (const auto& item : v["items"]) {
    bool ok = item["passed"].get<bool>();
    failed += !ok;
    out << (ok ? "PASS  " : "FAIL  ") << item["name"].get<std::string>();
    const auto& detail = item["detail"].get_ref<const std::string&>();
    if (!detail.empty()) out << "  " << detail;
    out << '\n';
  }
  if (failed)
    out << failed << " of " << v["items"].size() << " items failed\n";
  else
    out << "all " << v["items"].size() << " items passed\n";
}

void render_relations(std::ostream& out, const json& r) {
  for (const auto& rel : r["relations"])
    out << monomial_text(rel["lhs"]) << " - " << monomial_text(rel["rhs"]) << "  "
        << (rel["holds"].get<bool>() ? "holds" : "fails") << '\n';
}

}  // namespace

json number(const Integer& v) {
  if (abs(v) > json_safe_limit) return to_string(v);
  return static_cast<std::int64_t>(v);
}

json vector_json(const LatticeVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(number(x));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

json hilbert_report(const AffineSemigroup& s) {
  return json{{"hilbert_basis", vectors_json(s.hilbert_basis().elements())},
              {"pointed", s.is_pointed()},
              {"rays", vectors_json(primitive_rays(s.cone()))},
              {"saturated", s.is_saturated()}};
}

json charts_report(const AffineSemigroup& s, Characteristic p, BlowupMode mode) {
  json charts = json::array();
  if (mode == BlowupMode::nash) {
    for (const auto& c : all_charts(s, p))
      charts.push_back({{"A", subset_json(c.subset)},
                        {"gamma", gamma_json(c)},
                        {"pointed", c.pointed},
                        {"generators", vectors_json(c.chart_generators)}});
  } else {
    for (const auto& n : normalized_nash_charts(s, p)) {
      json subsets = json::array();
      for (const auto& a : n.subsets) subsets.push_back(subset_json(a));
      ChartSpec first = make_chart(s, n.subsets.front(), p);
      charts.push_back({{"A", subset_json(n.subsets.front())},
                        {"subsets", subsets},
                        {"gamma", gamma_json(first)},
                        {"pointed", true},
                        {"generators", vectors_json(n.semigroup.hilbert_basis().elements())}});
    }
  }
  return json{{"characteristic", p.value()},
              {"mode", mode_name(mode)},
              {"hilbert_basis", vectors_json(s.hilbert_basis().elements())},
              {"charts", charts}};
}

json iso_report(const std::optional<IsoWitness>& w) {
  json iso{{"found", w.has_value()}, {"matrix", nullptr}};
  if (w) iso["matrix"] = matrix_json(w->matrix);
  return json{{"iso", iso}};
}

json iteration_report(const IterationTree& tree, const RunConfig& cfg) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    json node{{"id", n.id},
              {"path", n.path},
              {"depth", n.depth},
              {"status", to_string(n.status)},
              {"parent", nullptr},
              {"iso", nullptr},
              {"hilbert_basis", vectors_json(n.semigroup.hilbert_basis().elements())}};
    if (n.parent) node["parent"] = {{"node", n.parent->node}, {"A", subset_json(n.parent->subset)}};
    if (n.iso_link)
      node["iso"] = {{"ancestor", n.iso_link->ancestor},
                     {"matrix", matrix_json(n.iso_link->witness.matrix)}};
    nodes.push_back(std::move(node));
  }
  return json{{"iterations",
               {{"characteristic", cfg.characteristic.value()},
                {"mode", mode_name(cfg.mode)},
                {"max_depth", cfg.max_depth},
                {"outcome", to_string(tree.outcome)},
                {"warnings", tree.warnings},
                {"nodes", nodes}}}};
}

json verification_report(const VerificationReport& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  return json{{"verification", {{"passed", r.all_passed()}, {"items", items}}}};
}

json binomials_report(std::span<const Binomial> relations, const std::vector<bool>& holds) {
  json out = json::array();
  for (std::size_t i = 0; i < relations.size(); ++i) {
    json lhs = json::array(), rhs = json::array();
    for (const auto& e : relations[i].lhs) lhs.push_back(number(e));
    for (const auto& e : relations[i].rhs) rhs.push_back(number(e));
    out.push_back({{"lhs", lhs}, {"rhs", rhs}, {"holds", static_cast<bool>(holds[i])}});
  }
  return json{{"relations", out}};
}

std::string render(const json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";
  std::ostringstream out;
  if (report.contains("verification")) render_verification(out, report);
  else if (report.contains("iterations")) render_iterations(out, report);
  else if (report.contains("iso")) render_iso(out, report);
  else if (report.contains("relations")) render_relations(out, report);
  else if (report.contains("charts")) render_charts(out, report);
  else render_hilbert(out, report);
  return out.str();
}

}  // namespace toric::cli
