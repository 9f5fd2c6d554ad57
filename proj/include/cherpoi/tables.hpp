#pragma once

// Labelled tables and series documents in json / csv / latex / markdown.

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cherpoi/serialize.hpp"

namespace cherpoi {

struct Table {
  std::string kind;
  Json params = Json::object();
  std::string corner;  // what the row and column labels are
  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::string>> latex_cells;  // optional; falls back to cells
  Json exact;                                         // optional lossless payload for json output
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw InvalidInput("unsupported format '" + format + "'");
}

}  // namespace detail

inline std::string emit(const Table& t, const std::string& format) {
  detail::require_format(format, {"json", "csv", "latex", "markdown"});
  std::ostringstream out;
  const auto& tex = t.latex_cells.empty() ? t.cells : t.latex_cells;
  if (format == "json") {
    Json j{{"schema", kSeriesSchemaVersion}, {"kind", t.kind}, {"params", t.params}, {"layout", t.corner},
           {"rows", t.row_labels}, {"columns", t.col_labels}, {"entries", t.cells}};
    if (!t.exact.is_null()) j["exact"] = t.exact;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << detail::csv_field(t.corner);
    for (const auto& c : t.col_labels) out << ',' << detail::csv_field(c);
    out << '\n';
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
      out << detail::csv_field(t.row_labels[r]);
      for (const auto& c : t.cells[r]) out << ',' << detail::csv_field(c);
      out << '\n';
    }
  } else if (format == "latex") {
    out << "\\begin{tabular}{l|" << std::string(t.col_labels.size(), 'c') << "}\n";
    out << "$" << t.corner << "$";
    for (const auto& c : t.col_labels) out << " & $" << c << "$";
    out << " \\\\\n\\hline\n";
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
      out << "$" << t.row_labels[r] << "$";
      for (const auto& c : tex[r]) out << " & $" << c << "$";
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
  } else {
    out << "| " << t.corner << " |";
    for (const auto& c : t.col_labels) out << ' ' << c << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < t.col_labels.size(); ++i) out << "---|";
    out << '\n';
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
      out << "| " << t.row_labels[r] << " |";
      for (const auto& c : t.cells[r]) out << ' ' << c << " |";
      out << '\n';
    }
  }
  return out.str();
}

inline Table characters_table(int n) {
  auto ct = character_table(n);
  Table t;
  t.kind = "characters";
  t.params = {{"n", n}};
  t.corner = "irrep\\class";
  for (const auto& p : ct->partitions()) {
    t.col_labels.push_back(p.to_string());
    t.row_labels.push_back(p.to_string());
  }
  for (std::size_t i = 0; i < ct->partitions().size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < ct->partitions().size(); ++j) row.push_back(std::to_string(ct->value(i, j)));
    t.cells.push_back(row);
  }
  return t;
}

// Rows mu, columns lambda: row mu lists K_{lambda mu}(q,t), so n = 2 reads [[1,q],[t,1]].
inline Table kostka_table(int n) {
  auto km = kostka_macdonald(n);
  Table t;
  t.kind = "kostka-macdonald";
  t.params = {{"n", n}, {"engine", kEngineVersion}};
  t.corner = "mu\\lambda";
  for (const auto& p : km->partitions) {
    t.col_labels.push_back(p.to_string());
    t.row_labels.push_back(p.to_string());
  }
  Json exact = Json::array();
  for (std::size_t m = 0; m < km->partitions.size(); ++m) {
    std::vector<std::string> row, tex;
    Json ex = Json::array();
    for (std::size_t l = 0; l < km->partitions.size(); ++l) {
      row.push_back(render(km->entries[l][m], Style::text));
      tex.push_back(render(km->entries[l][m], Style::latex));
      ex.push_back(to_json(km->entries[l][m]));
    }
    t.cells.push_back(row);
    t.latex_cells.push_back(tex);
    exact.push_back(ex);
  }
  t.exact = exact;
  return t;
}

inline Table fake_degree_table(int n) {
  Table t;
  t.kind = "fake-degrees";
  t.params = {{"n", n}};
  t.corner = "mu";
  t.col_labels = {"f_mu(v)", "n(mu)", "f_mu(1)"};
  for (const auto& mu : enumerate_partitions(n)) {
    Poly1 f = fake_degree(mu);
    t.row_labels.push_back(mu.to_string());
    t.cells.push_back({render(f, Style::text), std::to_string(mu.nstat()), to_string(at_one(f))});
    t.latex_cells.push_back({render(f, Style::latex), std::to_string(mu.nstat()), to_string(at_one(f))});
  }
  return t;
}

inline Table emit_table_for(const std::string& kind, int n) {
  if (kind == "characters") return characters_table(n);
  if (kind == "kostka-macdonald") return kostka_table(n);
  if (kind == "fake-degrees") return fake_degree_table(n);
  throw InvalidInput("unknown table kind '" + kind + "'");
}

// ---- series ----

struct SeriesRequest {
  std::string kind;
  int n = 2;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<Partition> mu;
  Grading grading = Grading::h;
  bool grading_given = false;
};

struct SeriesDocument {
  SeriesRequest request;
  std::variant<RF1, RF2> series;
  std::optional<CExponent> prefix;  // eDelta only: formal v^{prefix} in front
  Direction direction = Direction::ascending;
  std::vector<Poly2> expansion_den;  // s,t series: denominator to rewrite over before expanding
};

inline const std::vector<std::string>& series_kinds() {
  static const std::vector<std::string> kinds{"JJ", "J", "Jbar", "Nbar", "Nunder", "Mbar", "Munder", "eDelta"};
  return kinds;
}

inline SeriesDocument compute_series(const SeriesRequest& r) {
  SeriesDocument doc;
  doc.request = r;
  const bool graded = r.kind == "Nbar" || r.kind == "Nunder" || r.kind == "Mbar" || r.kind == "Munder";
  if (r.grading_given && !graded) throw InvalidInput("--grading applies to Nbar, Nunder, Mbar and Munder only");
  if (r.kind != "eDelta" && r.mu) throw InvalidInput("--mu applies to eDelta only");
  const bool uses_d = r.kind == "JJ" || r.kind == "J" || r.kind == "Jbar";
  if (uses_d && r.k) throw InvalidInput(r.kind + " takes --d, not --k");
  if (graded && r.d) throw InvalidInput(r.kind + " takes --k, not --d");
  const int d = r.d.value_or(0);
  if (r.kind == "JJ") {
    doc.series = bigraded_JJ(r.n, d);
    doc.expansion_den = polynomial_ring_factors(r.n + 1);
  } else if (r.kind == "J") {
    doc.series = bigraded_J(r.n, d);
    doc.expansion_den = polynomial_ring_factors(r.n);
  } else if (r.kind == "Jbar") {
    doc.series = jbar_closed(r.n, d);
    doc.direction = Direction::descending;
  } else if (r.kind == "Nbar") {
    doc.series = nbar_series(r.n, r.k.value_or(0), r.grading);
    doc.direction = Direction::descending;
  } else if (r.kind == "Nunder") {
    doc.series = nunder_series(r.n, r.k.value_or(0), r.grading);
  } else if (r.kind == "Mbar") {
    doc.series = mbar_series(r.n, r.k.value_or(1), r.grading);
    doc.direction = Direction::descending;
  } else if (r.kind == "Munder") {
    doc.series = munder_series(r.n, r.k.value_or(1), r.grading);
  } else if (r.kind == "eDelta") {
    if (!r.mu) throw InvalidInput("eDelta needs --mu");
    if (r.mu->size() != r.n) throw InvalidInput("--mu must be a partition of n");
    auto s = e_standard_series(*r.mu);
    doc.series = s.body;
    doc.prefix = s.prefix;
  } else {
    throw InvalidInput("unknown series kind '" + r.kind + "'");
  }
  return doc;
}

inline Json request_json(const SeriesRequest& r) {
  Json j{{"kind", r.kind}, {"n", r.n}};
  if (r.d) j["d"] = *r.d;
  if (r.k) j["k"] = *r.k;
  if (r.mu) j["mu"] = to_json(*r.mu);
  if (r.kind == "Nbar" || r.kind == "Nunder" || r.kind == "Mbar" || r.kind == "Munder") j["grading"] = r.grading == Grading::h ? "h" : "E";
  return j;
}

// csv lists the expansion coefficients in the window: exponents -A..B for a
// series in v, the box [0,A] x [0,B] for a series in s, t.
inline std::string emit(const SeriesDocument& doc, const std::string& format, std::pair<int, int> window = {10, 10}) {
  detail::require_format(format, {"json", "csv", "latex", "markdown", "text"});
  auto text = std::visit([&](const auto& f) { return render(f, Style::text, doc.direction); }, doc.series);
  auto tex = std::visit([&](const auto& f) { return render(f, Style::latex, doc.direction); }, doc.series);
  if (doc.prefix) {
    text = "v^{" + doc.prefix->to_string() + "} * " + text;
    tex = "v^{" + doc.prefix->to_string() + "} " + tex;
  }
  std::ostringstream out;
  if (format == "text") {
    out << text << '\n';
  } else if (format == "latex") {
    out << "$" << tex << "$\n";
  } else if (format == "markdown") {
    std::string params;
    const Json req = request_json(doc.request);
    for (const auto& [k, v] : req.items())
      if (k != "kind") params += (params.empty() ? "" : ", ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    out << "| series | parameters | closed form |\n|---|---|---|\n";
    out << "| " << doc.request.kind << " | " << params << " | $" << tex << "$ |\n";
  } else if (format == "json") {
    Json j = request_json(doc.request);
    j["schema"] = kSeriesSchemaVersion;
    j["series"] = std::visit([](const auto& f) { return to_json(f); }, doc.series);
    if (doc.prefix) j["prefix"] = to_json(*doc.prefix);
    j["display"] = text;
    out << j.dump(2) << '\n';
  } else {
    if (window.first < 0 || window.second < 0) throw InvalidInput("window bounds must be nonnegative");
    if (const auto* f1 = std::get_if<RF1>(&doc.series)) {
      Poly1 e = f1->expand_window({doc.direction}, {{-window.first}, {window.second}});
      out << "exponent,coefficient\n";
      for (const auto& [x, c] : e.terms()) {
        std::string exp = std::to_string(x[0]);
        if (doc.prefix) exp = (*doc.prefix + CExponent{Rational(x[0]), 0}).to_string();
        out << detail::csv_field(exp) << ',' << to_string(c) << '\n';
      }
    } else {
      const RF2 f2 = std::get<RF2>(doc.series).rewrite_over(doc.expansion_den);
      Poly2 e = f2.expand_window({Direction::ascending, Direction::ascending}, {{0, 0}, {window.first, window.second}});
      out << "s,t,coefficient\n";
      for (const auto& [x, c] : e.terms()) out << x[0] << ',' << x[1] << ',' << to_string(c) << '\n';
    }
  }
  return out.str();
}

}  // namespace cherpoi
