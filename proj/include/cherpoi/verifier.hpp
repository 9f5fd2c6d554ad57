#pragma once

// Identity suites. Each suite expands into a list of independent checks that
// run in a small thread pool; results are assembled in plan order, so reports
// are byte-identical for the same parameters unless timings are requested.

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cherpoi/oracle.hpp"
#include "cherpoi/serialize.hpp"

namespace cherpoi {

enum class Verdict { pass, fail, unsaturated, skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unsaturated: return "unsaturated";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitResource = 2, kExitInput = 3 };

struct CheckResult {
  std::string name;
  Json params = Json::object();
  Verdict verdict = Verdict::pass;
  Json lhs;
  Json rhs;
  std::string note;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  Json grid = Json::object();
  std::vector<CheckResult> checks;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.verdict == v; }));
  }
  bool passed() const { return count(Verdict::fail) == 0; }

  // fail beats resource trouble; unsaturated diagonals count as resource trouble
  int exit_code() const {
    if (count(Verdict::fail)) return kExitFail;
    if (count(Verdict::skipped) || count(Verdict::unsaturated)) return kExitResource;
    return kExitPass;
  }

  Json to_json(bool timings = false) const {
    Json cs = Json::array();
    for (const auto& c : checks) {
      Json j{{"name", c.name}, {"params", c.params}, {"verdict", cherpoi::to_string(c.verdict)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
      if (!c.note.empty()) j["note"] = c.note;
      if (timings) j["seconds"] = c.seconds;
      cs.push_back(j);
    }
    return Json{{"schema", kReportSchemaVersion},
                {"engine", kEngineVersion},
                {"suite", suite},
                {"grid", grid},
                {"summary",
                 {{"pass", count(Verdict::pass)},
                  {"fail", count(Verdict::fail)},
                  {"unsaturated", count(Verdict::unsaturated)},
                  {"skipped", count(Verdict::skipped)}}},
                {"exit_code", exit_code()},
                {"checks", cs}};
  }
};

struct SuiteParams {
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<std::pair<int, int>> window;
  std::optional<int> max_total;
  std::uint64_t seed = 20240601;
  int jobs = 1;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fake-degrees", "kostka",      "omega-specialization", "jbar-chain",
                                              "eqpoi",        "appendix-b",  "oracle-J",             "oracle-jbar",
                                              "coinvariants", "parity",      "graded-free"};
  return names;
}

struct PlannedCheck {
  std::string name;
  Json params;
  std::function<CheckResult()> run;
};

namespace detail {

inline CheckResult compare(Json lhs, Json rhs, bool equal) {
  CheckResult r;
  r.verdict = equal ? Verdict::pass : Verdict::fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

template <std::size_t N>
CheckResult compare_rf(const RationalFunction<N>& a, const RationalFunction<N>& b) {
  return compare(to_json(a), to_json(b), rf_equal(a, b));
}

// [lo, hi] for the n-loop of a suite; --n pins a single value
inline std::pair<int, int> n_range(const SuiteParams& p, int lo, int default_max) {
  if (p.n) return {*p.n, *p.n};
  return {lo, p.n_max.value_or(default_max)};
}

inline std::pair<int, int> param_range(const std::optional<int>& pinned, int lo, int hi) {
  if (pinned) return {*pinned, *pinned};
  return {lo, hi};
}

inline Json cells_to_json(const std::map<Bidegree, long>& cells) {
  Json out = Json::array();
  for (const auto& [c, v] : cells) out.push_back(Json::array({c.first, c.second, v}));
  return out;
}

// [1]_{v^{-1}} [2]_{v^{-1}} ... [n]_{v^{-1}}
inline Poly1 inverse_q_factorial(int n) {
  Poly1 out = Poly1::constant(1);
  for (int i = 1; i <= n; ++i) {
    Poly1 bracket;
    for (int j = 0; j < i; ++j) bracket += vpow(-j);
    out *= bracket;
  }
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace detail

// ---- suite plans ----

inline std::vector<PlannedCheck> plan_fake_degrees(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 1, 8);
  detail::require(lo >= 1, "fake-degrees needs n >= 1");
  for (int n = lo; n <= hi; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      Json prm{{"mu", to_json(mu)}};
      out.push_back({"hook-vs-maj", prm, [mu] { return detail::compare(to_json(fake_degree(mu)), to_json(fake_degree_maj(mu)), fake_degree(mu) == fake_degree_maj(mu)); }});
      out.push_back({"transpose-symmetry", prm, [mu, n] {
                       // f_mu(v) = v^N f_{mu^t}(v^{-1})
                       Poly1 lhs = fake_degree(mu);
                       Poly1 rhs = vpow(n * (n - 1) / 2) * invert_variable(fake_degree(mu.transpose()));
                       return detail::compare(to_json(lhs), to_json(rhs), lhs == rhs);
                     }});
      out.push_back({"inverse-shift", prm, [mu] {
                       // f_mu(v^{-1}) = f_{mu^t}(v^{-1}) v^{n(mu^t) - n(mu)}
                       Poly1 lhs = invert_variable(fake_degree(mu));
                       Poly1 rhs = invert_variable(fake_degree(mu.transpose())) * vpow(mu.transpose().nstat() - mu.nstat());
                       return detail::compare(to_json(lhs), to_json(rhs), lhs == rhs);
                     }});
      out.push_back({"lowest-degree", prm, [mu] {
                       auto low = fake_degree(mu).min_degree(0);
                       return detail::compare(Json(low), Json(mu.nstat()), low == mu.nstat());
                     }});
    }
    out.push_back({"sum-identity", Json{{"n", n}}, [n] {
                     Poly1 lhs;
                     for (const auto& l : enumerate_partitions(n)) lhs += invert_variable(fake_degree(l)) * Rational(dim_irr(l));
                     Poly1 rhs = detail::inverse_q_factorial(n);
                     return detail::compare(to_json(lhs), to_json(rhs), lhs == rhs);
                   }});
  }
  return out;
}

inline std::vector<PlannedCheck> plan_kostka(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 1, 5);
  detail::require(lo >= 1, "kostka needs n >= 1");
  for (int n = lo; n <= hi; ++n) {
    Json prm{{"n", n}};
    out.push_back({"certified", prm, [n] {
                     std::string why = certify_kostka_macdonald(*kostka_macdonald(n));
                     auto r = detail::compare(Json(why.empty() ? "certified" : why), Json("certified"), why.empty());
                     return r;
                   }});
    out.push_back({"positivity", prm, [n] {
                     auto km = kostka_macdonald(n);
                     Json bad = Json::array();
                     for (std::size_t l = 0; l < km->partitions.size(); ++l)
                       for (std::size_t m = 0; m < km->partitions.size(); ++m) {
                         const auto& e = km->entries[l][m];
                         if (!e.is_polynomial() || !e.has_nonnegative_integer_coefficients() || e.is_zero())
                           bad.push_back(Json::array({to_json(km->partitions[l]), to_json(km->partitions[m]), to_json(e)}));
                       }
                     return detail::compare(bad, Json::array(), bad.empty());
                   }});
    out.push_back({"value-at-one", prm, [n] {
                     // K(1,1) = dim lambda, and sum_lambda K(1,1) dim lambda = n!
                     auto km = kostka_macdonald(n);
                     Json lhs = Json::array(), rhs = Json::array();
                     bool ok = true;
                     for (std::size_t m = 0; m < km->partitions.size(); ++m) {
                       Rational col = 0;
                       for (std::size_t l = 0; l < km->partitions.size(); ++l) {
                         Rational v = km->entries[l][m].evaluate({Rational(1), Rational(1)});
                         Rational dim(dim_irr(km->partitions[l]));
                         ok = ok && v == dim;
                         col += v * dim;
                       }
                       lhs.push_back(to_string(col));
                       rhs.push_back(factorial(static_cast<unsigned>(n)).get_str());
                       ok = ok && col == Rational(factorial(static_cast<unsigned>(n)));
                     }
                     return detail::compare(lhs, rhs, ok);
                   }});
    if (n == 2)
      out.push_back({"two-by-two", prm, [] {
                       // rows mu, columns lambda: [[1, q], [t, 1]]
                       auto km = kostka_macdonald(2);
                       const Partition two{2}, one_one{1, 1};
                       std::vector<std::vector<Poly2>> got{{km->at(two, two), km->at(one_one, two)},
                                                           {km->at(two, one_one), km->at(one_one, one_one)}};
                       std::vector<std::vector<Poly2>> want{{qt_poly(1), qt_mono(1, 0)}, {qt_mono(0, 1), qt_poly(1)}};
                       Json g = Json::array(), w = Json::array();
                       for (int i = 0; i < 2; ++i) {
                         g.push_back(Json::array({to_json(got[i][0]), to_json(got[i][1])}));
                         w.push_back(Json::array({to_json(want[i][0]), to_json(want[i][1])}));
                       }
                       return detail::compare(g, w, got == want);
                     }});
    if (n >= 2 && n <= 4)
      out.push_back({"trivial-target", prm, [n] {
                       RF2 target(Poly2::constant(1), polynomial_ring_factors(n));
                       auto r = detail::compare_rf(bigraded_J(n, 0), target);
                       bool other = rf_equal(bigraded_J(n, 0, KostkaArgumentOrder::sinv_t), target);
                       r.note = std::string("argument order K(s^-1,t): ") + (other ? "holds" : "fails");
                       return r;
                     }});
  }
  return out;
}

inline std::vector<PlannedCheck> plan_omega(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 1, 6);
  detail::require(lo >= 1, "omega-specialization needs n >= 1");
  for (int n = lo; n <= hi; ++n)
    for (const auto& mu : enumerate_partitions(n))
      out.push_back({"specialization", Json{{"mu", to_json(mu)}}, [mu] { return detail::compare_rf(omega_specialized(mu), omega_specialization_closed(mu)); }});
  return out;
}

inline std::vector<PlannedCheck> plan_jbar_chain(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 2, 5);
  auto [dlo, dhi] = detail::param_range(p.d, 0, 3);
  detail::require(lo >= 2, "jbar-chain needs n >= 2");
  detail::require(dlo >= 0, "d must be nonnegative");
  for (int n = lo; n <= hi; ++n)
    for (int d = dlo; d <= dhi; ++d)
      out.push_back({"closed-vs-specialization", Json{{"n", n}, {"d", d}}, [n, d] { return detail::compare_rf(jbar_closed(n, d), jbar_via_specialization(n, d)); }});
  // the fake-degree identity behind the chain, both readings
  const int ihi = std::min(hi, 5);
  for (int n = std::max(lo, 1); n <= ihi; ++n)
    for (const auto& mu : enumerate_partitions(n))
      out.push_back({"fake-degree-identity", Json{{"mu", to_json(mu)}}, [mu] {
                       auto s = kostka_fake_degree_identity(mu, FakeDegreeVariant::printed);
                       auto alt = kostka_fake_degree_identity(mu, FakeDegreeVariant::lambda);
                       auto r = detail::compare_rf(s.lhs, s.rhs);
                       r.note = std::string("f_lambda variant: ") + (rf_equal(alt.lhs, alt.rhs) ? "holds" : "fails");
                       return r;
                     }});
  if (ihi >= std::max(lo, 1))
    out.push_back({"exactly-one-variant", Json{{"n_max", ihi}}, [lo = std::max(lo, 1), ihi] {
                     bool printed = true, lambda = true;
                     for (int n = lo; n <= ihi; ++n)
                       for (const auto& mu : enumerate_partitions(n)) {
                         auto s = kostka_fake_degree_identity(mu, FakeDegreeVariant::printed);
                         auto alt = kostka_fake_degree_identity(mu, FakeDegreeVariant::lambda);
                         printed = printed && rf_equal(s.lhs, s.rhs);
                         lambda = lambda && rf_equal(alt.lhs, alt.rhs);
                       }
                     return detail::compare(Json{{"printed", printed}, {"f_lambda", lambda}}, Json("exactly one variant holds"),
                                            printed != lambda);
                   }});
  return out;
}

inline std::vector<PlannedCheck> plan_eqpoi(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 2, 5);
  auto [klo, khi] = detail::param_range(p.k, 0, 3);
  detail::require(lo >= 2 && klo >= 0, "eqpoi needs n >= 2 and k >= 0");
  for (int n = lo; n <= hi; ++n)
    for (int k = klo; k <= khi; ++k)
      out.push_back({"nbar-vs-jbar", Json{{"n", n}, {"k", k}}, [n, k] {
                       return detail::compare_rf(nbar_series(n, k, Grading::E), vmono(k * big_n(n)) * jbar_closed(n, k));
                     }});
  return out;
}

inline std::vector<PlannedCheck> plan_appendix_b(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 2, 5);
  auto [klo, khi] = detail::param_range(p.k, 1, 3);
  detail::require(lo >= 2 && klo >= 1, "appendix-b needs n >= 2 and k >= 1");
  for (int n = lo; n <= hi; ++n)
    for (int k = klo; k <= khi; ++k) {
      Json prm{{"n", n}, {"k", k}};
      out.push_back({"mbar-vs-jbar", prm, [n, k] {
                       RF1 rhs = vmono(k * big_n(n)) * jbar_closed(n, k - 1) / q_factorial(n);
                       return detail::compare_rf(mbar_series(n, k, Grading::E), rhs);
                     }});
      out.push_back({"mbar-rearrangement", prm, [n, k] { return detail::compare_rf(mbar_unrearranged(n, k), mbar_series(n, k, Grading::h)); }});
    }
  return out;
}

inline std::vector<PlannedCheck> plan_oracle_j(const SuiteParams& p) {
  struct Config {
    int n, d;
    OracleWindow w;
  };
  std::vector<Config> configs;
  auto window_for = [&](int n) {
    if (p.window) return OracleWindow{p.window->first, p.window->second, p.max_total.value_or(-1)};
    if (n == 2) return OracleWindow{10, 10, p.max_total.value_or(-1)};
    return OracleWindow{8, 8, p.max_total.value_or(8)};
  };
  if (p.n) {
    auto [dlo, dhi] = detail::param_range(p.d, 0, *p.n <= 3 ? 3 - (*p.n == 3) : 1);
    for (int d = dlo; d <= dhi; ++d) configs.push_back({*p.n, d, window_for(*p.n)});
  } else {
    for (int n = 2; n <= std::min(3, p.n_max.value_or(3)); ++n) {
      auto [dlo, dhi] = detail::param_range(p.d, 0, n == 2 ? 3 : 2);
      for (int d = dlo; d <= dhi; ++d) configs.push_back({n, d, window_for(n)});
    }
  }
  std::vector<PlannedCheck> out;
  for (const auto& c : configs) {
    detail::require(c.d >= 0, "d must be nonnegative");
    Json prm{{"n", c.n}, {"d", c.d}, {"window", {c.w.max_a, c.w.max_b}}, {"max_total", c.w.max_total}};
    out.push_back({"ideal-power-cells", prm, [c] {
                     auto dims = ideal_power_dims(c.n, c.d, c.w);
                     Poly2 series = bigraded_J_window(c.n, c.d, c.w.max_a, c.w.max_b);
                     std::map<Bidegree, long> formula;
                     bool ok = true;
                     for (const auto& [cell, v] : dims.dims) {
                       Rational f = series.coefficient({cell.first, cell.second});
                       formula[cell] = to_long(f);
                       ok = ok && f == Rational(v);
                     }
                     return detail::compare(detail::cells_to_json(dims.dims), detail::cells_to_json(formula), ok);
                   }});
  }
  return out;
}

// Diagonals -min(A, B)/2 <= g <= A must saturate; further out the window only
// feeds the saturation test.
inline std::vector<PlannedCheck> plan_oracle_jbar(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 2, 3);
  auto [dlo, dhi] = detail::param_range(p.d, 0, 2);
  detail::require(lo >= 2 && dlo >= 0, "oracle-jbar needs n >= 2 and d >= 0");
  OracleWindow w = p.window ? OracleWindow{p.window->first, p.window->second} : OracleWindow{10, 10};
  const long reach = std::min(w.max_a, w.max_b) / 2;
  const long top = w.max_a;
  for (int n = lo; n <= hi; ++n)
    for (int d = dlo; d <= dhi; ++d)
      out.push_back({"saturated-diagonals", Json{{"n", n}, {"d", d}, {"window", {w.max_a, w.max_b}}, {"required", {-reach, top}}}, [n, d, w, reach, top] {
                       auto dd = jbar_dims(n, d, w);
                       Poly1 series = jbar_closed(n, d).expand_window({Direction::descending}, {{-w.max_b}, {w.max_a}});
                       Json lhs = Json::array(), rhs = Json::array();
                       bool ok = true, saturated = true;
                       for (const auto& [g, v] : dd.dims) {
                         if (g < -reach || g > top) continue;
                         if (!dd.saturated.at(g)) {
                           saturated = false;
                           continue;
                         }
                         Rational f = series.coefficient({g});
                         lhs.push_back(Json::array({g, v}));
                         rhs.push_back(Json::array({g, to_long(f)}));
                         ok = ok && f == Rational(v);
                       }
                       auto r = detail::compare(lhs, rhs, ok);
                       if (ok && !saturated) {
                         r.verdict = Verdict::unsaturated;
                         r.note = "a required diagonal did not stabilise; enlarge the window";
                       }
                       return r;
                     }});
  return out;
}

inline std::vector<PlannedCheck> plan_coinvariants(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 2, 4);
  detail::require(lo >= 2, "coinvariants needs n >= 2");
  for (int n = lo; n <= hi; ++n)
    out.push_back({"graded-multiplicities", Json{{"n", n}}, [n] {
                     auto mult = coinvariant_multiplicities(n);
                     Json lhs = Json::object(), rhs = Json::object();
                     bool ok = true;
                     for (const auto& mu : enumerate_partitions(n)) {
                       Poly1 oracle;
                       for (const auto& [deg, m] : mult)
                         if (m.count(mu)) oracle += vpow(deg, Rational(m.at(mu)));
                       Poly1 f = fake_degree(mu);
                       lhs[mu.to_string()] = to_json(oracle);
                       rhs[mu.to_string()] = to_json(f);
                       ok = ok && oracle == f;
                     }
                     return detail::compare(lhs, rhs, ok);
                   }});
  return out;
}

inline std::vector<PlannedCheck> plan_parity(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  auto [lo, hi] = detail::n_range(p, 2, 3);
  auto [dlo, dhi] = detail::param_range(p.d, 0, 3);
  detail::require(lo >= 2 && dlo >= 0, "parity needs n >= 2 and d >= 0");
  for (int n = lo; n <= hi; ++n)
    for (int d = dlo; d <= dhi; ++d) {
      OracleWindow w = p.window ? OracleWindow{p.window->first, p.window->second, p.max_total.value_or(-1)}
                                : OracleWindow{3 * d + 3, 3 * d + 3, 3 * d + 3};
      out.push_back({"isotypic-part", Json{{"n", n}, {"d", d}, {"window", {w.max_a, w.max_b}}, {"max_total", w.max_total}}, [n, d, w] {
                       auto rep = parity_report(n, d, w);
                       Json bad = Json::array();
                       for (const auto& [c, dims] : rep.mismatches) bad.push_back(Json::array({c.first, c.second, dims.first, dims.second}));
                       return detail::compare(bad, Json::array(), rep.holds);
                     }});
    }
  return out;
}

namespace detail {

inline CheckResult graded_free_check(const GradedIdempotent& e, const std::multiset<int>& want_degrees) {
  auto b = extract_homogeneous_basis(e);
  FreeModule f(e.matrix.algebra, e.shifts());
  const auto& alg = f.algebra();
  bool ok = true;
  std::multiset<int> got;
  for (const auto& g : b.generators) {
    got.insert(g.degree);
    for (std::size_t i = 0; i < f.rank(); ++i) ok = ok && g.components[i].size() == alg.dim(g.degree - f.shifts()[i]);
    ok = ok && f.flatten(f.apply(e.matrix, g)) == f.flatten(g);
  }
  Json hf_free = Json::array(), hf_image = Json::array();
  for (int deg = min_shift(e.shifts()); deg <= b.horizon; ++deg) {
    std::size_t free_dim = 0;
    for (const auto& g : b.generators) free_dim += alg.dim(deg - g.degree);
    std::size_t image = image_dimension(f, e.matrix, deg);
    hf_free.push_back(free_dim);
    hf_image.push_back(image);
    ok = ok && free_dim == image;
  }
  ok = ok && got == want_degrees;
  Json lhs{{"degrees", std::vector<int>(got.begin(), got.end())}, {"hilbert", hf_free}};
  Json rhs{{"degrees", std::vector<int>(want_degrees.begin(), want_degrees.end())}, {"hilbert", hf_image}};
  auto r = compare(lhs, rhs, ok);
  r.note = "certified through degree " + std::to_string(b.horizon);
  return r;
}

}  // namespace detail

inline std::vector<PlannedCheck> plan_graded_free(const SuiteParams& p) {
  std::vector<PlannedCheck> out;
  const int cutoff = 12;
  out.push_back({"identity", Json{{"shifts", {0, 2, 3}}}, [] {
                   auto a = std::make_shared<const ConnectedGradedAlgebra>(ConnectedGradedAlgebra::polynomial(1, cutoff));
                   return detail::graded_free_check({HomogeneousMatrix::identity(a, {0, 2, 3}), cutoff}, {0, 2, 3});
                 }});
  out.push_back({"coordinate-projection", Json{{"shifts", {0, 2, 3}}}, [] {
                   auto a = std::make_shared<const ConnectedGradedAlgebra>(ConnectedGradedAlgebra::polynomial(1, cutoff));
                   auto d = HomogeneousMatrix::zero(a, {0, 2, 3});
                   d.entries[0][0] = a->one();
                   return detail::graded_free_check({d, cutoff}, {0});
                 }});
  out.push_back({"unipotent-conjugate", Json{{"shifts", {2, 1}}}, [] {
                   auto a = std::make_shared<const ConnectedGradedAlgebra>(ConnectedGradedAlgebra::polynomial(1, cutoff));
                   std::vector<int> shifts{2, 1};
                   auto u = HomogeneousMatrix::identity(a, shifts), uinv = u;
                   u.entries[1][0] = a->basis_element(1, 0);
                   uinv.entries[1][0] = a->basis_element(1, 0);
                   uinv.entries[1][0][0] = -1;
                   auto d = HomogeneousMatrix::zero(a, shifts);
                   d.entries[0][0] = a->one();
                   return detail::graded_free_check({u * d * uinv, cutoff}, {2});
                 }});
  std::mt19937_64 seeds(p.seed);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t vars = trial % 2 ? 2 : 1;
    const std::uint64_t seed = seeds();
    std::vector<int> shifts{0, 1, 1, 3};
    std::vector<bool> keep{trial % 3 != 0, true, trial % 2 == 0, trial % 5 != 1};
    Json prm{{"trial", trial}, {"variables", vars}, {"shifts", shifts}, {"keep", keep}, {"seed", std::to_string(seed)}};
    out.push_back({"random-conjugate", prm, [vars, seed, shifts, keep] {
                     auto a = std::make_shared<const ConnectedGradedAlgebra>(ConnectedGradedAlgebra::polynomial(vars, cutoff));
                     std::multiset<int> want;
                     for (std::size_t i = 0; i < shifts.size(); ++i)
                       if (keep[i]) want.insert(shifts[i]);
                     return detail::graded_free_check(conjugated_projection(a, shifts, keep, seed), want);
                   }});
  }
  return out;
}

inline std::vector<PlannedCheck> plan_suite(const std::string& name, const SuiteParams& p) {
  if (name == "fake-degrees") return plan_fake_degrees(p);
  if (name == "kostka") return plan_kostka(p);
  if (name == "omega-specialization") return plan_omega(p);
  if (name == "jbar-chain") return plan_jbar_chain(p);
  if (name == "eqpoi") return plan_eqpoi(p);
  if (name == "appendix-b") return plan_appendix_b(p);
  if (name == "oracle-J") return plan_oracle_j(p);
  if (name == "oracle-jbar") return plan_oracle_jbar(p);
  if (name == "coinvariants") return plan_coinvariants(p);
  if (name == "parity") return plan_parity(p);
  if (name == "graded-free") return plan_graded_free(p);
  throw InvalidInput("unknown suite '" + name + "'");
}

inline Json params_to_json(const SuiteParams& p) {
  Json j = Json::object();
  if (p.n) j["n"] = *p.n;
  if (p.n_max) j["n_max"] = *p.n_max;
  if (p.d) j["d"] = *p.d;
  if (p.k) j["k"] = *p.k;
  if (p.window) j["window"] = {p.window->first, p.window->second};
  if (p.max_total) j["max_total"] = *p.max_total;
  j["seed"] = std::to_string(p.seed);
  return j;
}

// Runs the planned checks on `jobs` threads. Resource errors become skipped
// entries; anything else thrown by a check is a failure with the message kept.
inline std::vector<CheckResult> run_checks(const std::vector<PlannedCheck>& plan, int jobs) {
  std::vector<CheckResult> results(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = plan[i].run();
      } catch (const ResourceError& e) {
        r.verdict = Verdict::skipped;
        r.note = e.what();
      } catch (const CertificationError& e) {
        r.verdict = Verdict::skipped;
        r.note = e.what();
      } catch (const std::exception& e) {
        r.verdict = Verdict::fail;
        r.note = e.what();
      }
      r.name = plan[i].name;
      r.params = plan[i].params;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(plan.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

inline SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
  SuiteReport rep;
  rep.suite = name;
  rep.grid = params_to_json(p);
  rep.checks = run_checks(plan_suite(name, p), p.jobs);
  return rep;
}

}  // namespace cherpoi
