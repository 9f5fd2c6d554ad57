#pragma once

// JSON forms of the library's values, and plain-text / LaTeX renderings.
//
// Series schema (version kSeriesSchemaVersion):
//   {"schema":1, "vars":["s","t"], "num":[["3/2",[1,0]], ...], "den":[[["1",[0,0]],["-1",[1,2]]], ...]}
// Coefficients are exact rationals written as strings; each term carries its
// exponent vector. "den" is the list of denominator factors.

#include <json.hpp>

#include <string>
#include <vector>

#include "cherpoi/graded_free.hpp"
#include "cherpoi/hilbert_series.hpp"
#include "cherpoi/macdonald.hpp"

namespace cherpoi {

inline constexpr int kSeriesSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("partition must be a JSON array of integers");
    parts.push_back(x.get<int>());
  }
  return Partition(parts);
}

template <std::size_t N>
Json to_json(const LaurentPoly<N>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({to_string(c), Json(std::vector<std::int64_t>(e.begin(), e.end()))}));
  return terms;
}

template <std::size_t N>
LaurentPoly<N> poly_from_json(const Json& j, VarSet vars) {
  if (!j.is_array()) throw InvalidInput("polynomial must be a list of [coefficient, exponents] terms");
  LaurentPoly<N> p(vars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_array() || term[1].size() != N)
      throw InvalidInput("malformed polynomial term");
    Exponent<N> e{};
    for (std::size_t i = 0; i < N; ++i) e[i] = term[1][i].get<std::int64_t>();
    p.add_term(e, parse_rational(term[0].get<std::string>()));
  }
  return p;
}

template <std::size_t N>
Json to_json(const RationalFunction<N>& f) {
  Json den = Json::array();
  for (const auto& d : f.denominator_factors()) den.push_back(to_json(d));
  return Json{{"schema", kSeriesSchemaVersion}, {"vars", var_names(f.vars())}, {"num", to_json(f.numerator())}, {"den", den}};
}

template <std::size_t N>
RationalFunction<N> rf_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("num")) throw InvalidInput("series JSON needs vars and num");
  if (j.value("schema", kSeriesSchemaVersion) != kSeriesSchemaVersion) throw InvalidInput("unsupported series schema");
  VarSet vars = varset_from_names(j.at("vars").get<std::vector<std::string>>());
  if (var_count(vars) != N) throw InvalidInput("series has the wrong number of variables");
  std::vector<LaurentPoly<N>> den;
  if (j.contains("den"))
    for (const auto& d : j.at("den")) den.push_back(poly_from_json<N>(d, vars));
  return RationalFunction<N>(poly_from_json<N>(j.at("num"), vars), den);
}

inline Json to_json(const CExponent& c) { return Json{{"constant", to_string(c.constant)}, {"c", c.c_coeff}}; }

// Kostka-Macdonald matrix, as stored in the cache.
inline Json to_json(const KostkaMacdonaldMatrix& km) {
  Json parts = Json::array(), rows = Json::array();
  for (const auto& p : km.partitions) parts.push_back(to_json(p));
  for (const auto& row : km.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return Json{{"n", km.n}, {"engine", kEngineVersion}, {"partitions", parts}, {"entries", rows}};
}

inline KostkaMacdonaldMatrix kostka_from_json(const Json& j) {
  KostkaMacdonaldMatrix km;
  km.n = j.at("n").get<int>();
  for (const auto& p : j.at("partitions")) km.partitions.push_back(partition_from_json(p));
  for (const auto& row : j.at("entries")) {
    std::vector<Poly2> r;
    for (const auto& e : row) r.push_back(poly_from_json<2>(e, VarSet::qt));
    if (r.size() != km.partitions.size()) throw InvalidInput("kostka matrix row has the wrong length");
    km.entries.push_back(std::move(r));
  }
  if (km.entries.size() != km.partitions.size()) throw InvalidInput("kostka matrix is not square");
  if (km.partitions != enumerate_partitions(km.n)) throw InvalidInput("kostka matrix labels do not match n");
  return km;
}

// ---- rendering ----

// Constant first, then v, v^2, ..., then v^{-1}, v^{-2}, ...: reads as 1+v, 1-v^{-1}.
template <std::size_t N>
std::vector<std::pair<Exponent<N>, Rational>> display_order(const LaurentPoly<N>& p) {
  std::vector<std::pair<Exponent<N>, Rational>> terms(p.terms().begin(), p.terms().end());
  auto key = [](const Exponent<N>& e) {
    std::int64_t total = 0, neg = 0;
    for (auto x : e) {
      total += x < 0 ? -x : x;
      neg += x < 0 ? 1 : 0;
    }
    return std::make_tuple(neg, total, e);
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
  return terms;
}

enum class Style { text, latex };

template <std::size_t N>
std::string render(const LaurentPoly<N>& p, Style style) {
  if (p.is_zero()) return "0";
  const auto names = var_names(p.vars());
  std::string out;
  bool first = true;
  for (const auto& [e, c] : display_order(p)) {
    bool unit = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? "-" : "+");
    first = false;
    std::string coef;
    if (unit || mag != 1) {
      if (style == Style::latex && mag.get_den() != 1)
        coef = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
      else
        coef = mag.get_str();
    }
    out += coef;
    bool wrote = !coef.empty();
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      if (style == Style::text && wrote) out += "*";
      out += names[i];
      if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
      wrote = true;
    }
  }
  return out;
}

// A rational function as it is printed: numerator over a factor list, after
// cancelling the factors that divide the numerator exactly.
template <std::size_t N>
struct DisplayForm {
  LaurentPoly<N> num;
  std::vector<LaurentPoly<N>> den;
};

// With `descending`, binomial factors 1 - c v^k (k > 0) are written 1 - c^{-1} v^{-k},
// the orientation in which series with bounded positive part are read.
template <std::size_t N>
DisplayForm<N> display_form(const RationalFunction<N>& f, Direction dir = Direction::ascending) {
  DisplayForm<N> out{f.numerator(), {}};
  // larger factors first, so (1-v^2) is cancelled before (1-v) can split it
  auto factors = f.denominator_factors();
  auto span = [](const LaurentPoly<N>& p) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < N; ++i) s += p.max_degree(i) - p.min_degree(i);
    return s;
  };
  std::stable_sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) { return span(a) > span(b); });
  for (const auto& d : factors) {
    if (!out.num.is_zero()) {
      if (auto q = out.num.divide_exact(d)) {
        out.num = *q;
        continue;
      }
    }
    out.den.push_back(d);
  }
  if (out.num.is_zero()) out.den.clear();
  std::stable_sort(out.den.begin(), out.den.end(), [&](const auto& a, const auto& b) { return span(a) < span(b); });
  if constexpr (N == 1) {
    if (dir == Direction::descending)
      for (auto& d : out.den) {
        if (d.size() != 2 || d.coefficient({0}) != 1) continue;
        auto [e, c] = d.leading_term();
        if (e[0] <= 0) continue;
        // 1 + c v^k = c v^k (1 + c^{-1} v^{-k})
        out.num *= LaurentPoly<1>::monomial({-e[0]}, 1 / c, d.vars());
        d = LaurentPoly<1>::constant(1, d.vars()) + LaurentPoly<1>::monomial({-e[0]}, 1 / c, d.vars());
      }
  }
  return out;
}

template <std::size_t N>
std::string render(const DisplayForm<N>& f, Style style) {
  std::string num = render(f.num, style);
  if (f.den.empty()) return num;
  // group repeated factors into powers
  std::vector<std::pair<std::string, int>> groups;
  for (const auto& d : f.den) {
    std::string s = render(d, style);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == s; });
    if (it == groups.end())
      groups.emplace_back(s, 1);
    else
      ++it->second;
  }
  std::string den;
  for (const auto& [s, k] : groups) {
    den += "(" + s + ")";
    if (k > 1) den += "^{" + std::to_string(k) + "}";
  }
  if (style == Style::latex) return "\\frac{" + num + "}{" + den + "}";
  bool bare = f.num.size() == 1;
  return (bare ? num : "(" + num + ")") + "/" + den;
}

template <std::size_t N>
std::string render(const RationalFunction<N>& f, Style style, Direction dir = Direction::ascending) {
  return render(display_form(f, dir), style);
}

// ---- graded-free inputs ----
//
// idem.json:
//   {"algebra": {"variables": ["x","y"], "weights": [1,1], "truncation": 0},
//    "shifts": [0, 1],
//    "matrix": [[entry, ...], ...]}
// An entry is a list of [coefficient, exponent-vector] terms; entry (i,j) must
// be homogeneous of degree shifts[j] - shifts[i].

inline std::vector<int> exponent_vector(const Json& j, std::size_t vars) {
  if (!j.is_array() || j.size() != vars) throw InvalidInput("exponent vector has the wrong length");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 0) throw InvalidInput("exponents must be nonnegative integers");
    e.push_back(x.get<int>());
  }
  return e;
}

inline Coeffs algebra_element_from_json(const ConnectedGradedAlgebra& alg, int degree, const Json& j) {
  if (!j.is_array()) throw InvalidInput("algebra element must be a list of terms");
  Coeffs c = alg.zero(degree);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw InvalidInput("malformed algebra term");
    Rational coef = term[0].is_string() ? parse_rational(term[0].get<std::string>()) : Rational(term[0].get<long>());
    auto where = alg.locate(exponent_vector(term[1], alg.names().size()));
    if (!where) {
      if (coef == 0) continue;
      throw InvalidInput("term outside the algebra (past the cutoff or truncation)");
    }
    if (where->first != degree) throw InvalidInput("matrix entry is not homogeneous of the required degree");
    c[where->second] += coef;
  }
  return c;
}

inline Json algebra_element_to_json(const ConnectedGradedAlgebra& alg, int degree, const Coeffs& c) {
  Json out = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out.push_back(Json::array({to_string(c[i]), alg.monomial(degree, i)}));
  return out;
}

inline GradedIdempotent idempotent_from_json(const Json& j, int cutoff) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("shifts") || !j.contains("matrix"))
    throw InvalidInput("idempotent JSON needs algebra, shifts and matrix");
  const auto& a = j.at("algebra");
  auto names = a.at("variables").get<std::vector<std::string>>();
  std::vector<int> weights = a.contains("weights") ? a.at("weights").get<std::vector<int>>() : std::vector<int>(names.size(), 1);
  auto alg = std::make_shared<const ConnectedGradedAlgebra>(names, weights, cutoff, a.value("truncation", 0));
  auto shifts = j.at("shifts").get<std::vector<int>>();
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != shifts.size()) throw InvalidInput("matrix must have one row per shift");
  auto m = HomogeneousMatrix::zero(alg, shifts);
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != shifts.size()) throw InvalidInput("matrix must be square");
    for (std::size_t jj = 0; jj < shifts.size(); ++jj)
      m.entries[i][jj] = algebra_element_from_json(*alg, m.entry_degree(i, jj), rows[i][jj]);
  }
  return {m, cutoff};
}

inline Json to_json(const FreeModule& f, const FreeElement& x) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < f.rank(); ++i)
    comps.push_back(algebra_element_to_json(f.algebra(), x.degree - f.shifts()[i], x.components[i]));
  return Json{{"degree", x.degree}, {"components", comps}};
}

}  // namespace cherpoi
