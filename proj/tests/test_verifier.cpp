#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cherpoi/cache.hpp"
#include "cherpoi/verifier.hpp"

using namespace cherpoi;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("cherpoi-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Serialize, RationalFunctionRoundTrip) {
  RF2 f = bigraded_J(2, 1);
  Json j = to_json(f);
  EXPECT_EQ(j["vars"], Json({"s", "t"}));
  EXPECT_EQ(j["schema"], kSeriesSchemaVersion);
  RF2 back = rf_from_json<2>(Json::parse(j.dump()));
  EXPECT_TRUE(rf_equal(f, back));
  RF1 g(Poly1::constant(make_rational(3, 2)) + vpow(-2), {Poly1::one_minus({1})});
  EXPECT_TRUE(rf_equal(g, rf_from_json<1>(to_json(g))));
  EXPECT_EQ(to_json(g)["num"][0][0], "1");
  EXPECT_THROW(rf_from_json<2>(to_json(g)), InvalidInput);
  EXPECT_THROW(rf_from_json<1>(Json{{"vars", {"v"}}, {"num", {{"x", {1}}}}}), std::exception);
}

TEST(Serialize, PartitionAndKostka) {
  EXPECT_EQ(to_json(Partition({5, 5, 4, 3, 1})).dump(), "[5,5,4,3,1]");
  EXPECT_EQ(partition_from_json(Json::parse("[3,1]")), Partition({3, 1}));
  EXPECT_THROW(partition_from_json(Json::parse("[1,3]")), InvalidInput);
  auto km = kostka_macdonald(3);
  auto back = kostka_from_json(Json::parse(to_json(*km).dump()));
  EXPECT_EQ(back.partitions, km->partitions);
  EXPECT_EQ(back.entries, km->entries);
}

TEST(Render, JbarTwoPointsDegreeZero) {
  EXPECT_EQ(render(jbar_closed(2, 0), Style::text, Direction::descending), "(1+v)/(1-v^{-1})");
  EXPECT_EQ(render(jbar_closed(2, 0), Style::latex, Direction::descending), "\\frac{1+v}{(1-v^{-1})}");
  // the sum over fixed points collapses to the polynomial ring
  auto j0 = display_form(bigraded_J(3, 0));
  EXPECT_TRUE(j0.num.is_constant());
  EXPECT_EQ(j0.den.size(), 4u);
  EXPECT_EQ(render(vpow(1, make_rational(-1, 2)), Style::latex), "-\\frac{1}{2}v");
  EXPECT_EQ(render(mono2(2, 1, 3), Style::text), "3*s^{2}*t");
}

TEST(Serialize, IdempotentInput) {
  Json doc = Json::parse(R"({
    "algebra": {"variables": ["x"], "weights": [1]},
    "shifts": [2, 1],
    "matrix": [[[["1", [0]]], []],
               [[["1", [1]]], []]]
  })");
  auto e = idempotent_from_json(doc, 12);
  auto b = extract_homogeneous_basis(e);
  ASSERT_EQ(b.generators.size(), 1u);
  EXPECT_EQ(b.generators[0].degree, 2);
  EXPECT_EQ(b.horizon, 10);
  FreeModule f(e.matrix.algebra, e.shifts());
  Json g = to_json(f, b.generators[0]);
  EXPECT_EQ(g["degree"], 2);
  // entry (0,1) must have degree -1: any nonzero term there is rejected
  doc["matrix"][0][1] = Json::parse(R"([["1", [0]]])");
  EXPECT_THROW(idempotent_from_json(doc, 12), InvalidInput);
  doc["matrix"][0][1] = Json::array();
  doc["matrix"][1][0] = Json::parse(R"([["1", [2]]])");
  EXPECT_THROW(idempotent_from_json(doc, 12), InvalidInput);
}

TEST(Cache, RoundTripCorruptionAndPurge) {
  auto dir = scratch_dir("cache");
  DiskCache cache(dir);
  EXPECT_EQ(cache.status("thing", 3), EntryStatus::missing);
  EXPECT_FALSE(cache.load("thing", 3));
  Json payload{{"x", {1, 2, 3}}};
  cache.store("thing", 3, payload);
  EXPECT_EQ(cache.status("thing", 3), EntryStatus::ok);
  EXPECT_EQ(*cache.load("thing", 3), payload);
  EXPECT_EQ(cache.status("thing", 4), EntryStatus::missing);

  // flip a payload byte without touching the checksum
  auto file = cache.file_for("thing", 3);
  std::string text;
  {
    std::ifstream in(file);
    std::getline(in, text);
  }
  auto pos = text.find("[1,2,3]");
  ASSERT_NE(pos, std::string::npos);
  text[pos + 1] = '7';
  {
    std::ofstream out(file);
    out << text;
  }
  EXPECT_EQ(cache.status("thing", 3), EntryStatus::corrupt);
  EXPECT_FALSE(cache.load("thing", 3));
  {
    std::ofstream out(file);
    out << "{not json";
  }
  EXPECT_EQ(cache.status("thing", 3), EntryStatus::corrupt);
  cache.store("thing", 3, payload);
  EXPECT_EQ(cache.status("thing", 3), EntryStatus::ok);

  auto entries = cache.inspect();
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].kind, "thing");
  EXPECT_EQ(entries[0].status, EntryStatus::ok);
  // no temporaries are left behind
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(dir)) files += f.is_regular_file();
  EXPECT_EQ(files, 1u);
  EXPECT_EQ(cache.purge(), 1u);
  EXPECT_TRUE(cache.inspect().empty());
  std::filesystem::remove_all(dir);
}

TEST(Cache, UnwritableDirectory) {
  auto base = scratch_dir("blocked");
  std::filesystem::create_directories(base.parent_path());
  {
    std::ofstream out(base);
    out << "a file, not a directory";
  }
  DiskCache cache(base / "sub");
  EXPECT_THROW(cache.store("thing", 1, Json::object()), InvalidInput);
  std::filesystem::remove(base);
}

TEST(Cache, ResolveOrder) {
  EXPECT_EQ(DiskCache::resolve("/tmp/flag"), std::filesystem::path("/tmp/flag"));
  ::setenv("CHERPOI_CACHE", "/tmp/from-env", 1);
  EXPECT_EQ(DiskCache::resolve(""), std::filesystem::path("/tmp/from-env"));
  EXPECT_EQ(DiskCache::resolve("/tmp/flag"), std::filesystem::path("/tmp/flag"));
  ::unsetenv("CHERPOI_CACHE");
}

TEST(Cache, KostkaStoreRecomputesCorruptEntries) {
  auto dir = scratch_dir("kostka");
  auto cache = std::make_shared<const DiskCache>(dir);
  // a well-formed but wrong matrix with a valid checksum is rejected by certification
  auto km = compute_kostka_macdonald(3);
  auto tampered = km;
  tampered.entries[0][0] = qt_poly(2);
  cache->store(kKostkaKind, 3, to_json(tampered));
  install_kostka_cache(cache);
  const auto& store = detail::kostka_store();
  EXPECT_FALSE(store.load(3));
  store.save(km);
  auto loaded = store.load(3);
  ASSERT_TRUE(loaded);
  EXPECT_EQ(loaded->entries, km.entries);
  EXPECT_FALSE(store.load(4));
  set_kostka_store({});
  std::filesystem::remove_all(dir);
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 11u);
  EXPECT_THROW(run_suite("nope", {}), InvalidInput);
  SuiteParams bad;
  bad.n = 1;
  EXPECT_THROW(run_suite("jbar-chain", bad), InvalidInput);
}

TEST(Suites, SmallRunsPass) {
  SuiteParams p;
  p.n_max = 4;
  for (const std::string name : {"fake-degrees", "kostka", "omega-specialization", "eqpoi", "appendix-b"}) {
    auto rep = run_suite(name, p);
    EXPECT_TRUE(rep.passed()) << name << "\n" << rep.to_json().dump(1);
    EXPECT_EQ(rep.exit_code(), kExitPass) << name;
    EXPECT_GT(rep.checks.size(), 0u);
  }
  SuiteParams jc;
  jc.n_max = 3;
  jc.d = 1;
  auto rep = run_suite("jbar-chain", jc);
  EXPECT_EQ(rep.exit_code(), kExitPass) << rep.to_json().dump(1);
  auto last = rep.checks.back();
  EXPECT_EQ(last.name, "exactly-one-variant");
  EXPECT_EQ(last.lhs["printed"], true);
  EXPECT_EQ(last.lhs["f_lambda"], false);
}

TEST(Suites, OracleAndParitySmall) {
  SuiteParams p;
  p.n = 2;
  p.d = 1;
  p.window = {{6, 6}};
  EXPECT_EQ(run_suite("oracle-J", p).exit_code(), kExitPass);
  EXPECT_EQ(run_suite("parity", p).exit_code(), kExitPass);
  EXPECT_EQ(run_suite("oracle-jbar", p).exit_code(), kExitPass);
  SuiteParams c;
  c.n_max = 3;
  EXPECT_EQ(run_suite("coinvariants", c).exit_code(), kExitPass);
}

TEST(Suites, BudgetExceededIsSkipped) {
  SuiteParams p;
  p.n = 4;
  p.d = 2;
  p.window = {{4, 4}};
  auto rep = run_suite("oracle-J", p);
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_EQ(rep.checks[0].verdict, Verdict::skipped);
  EXPECT_EQ(rep.exit_code(), kExitResource);
}

TEST(Suites, FailureGivesExitOne) {
  SuiteReport rep;
  rep.checks.push_back({"a", {}, Verdict::pass, {}, {}, "", 0});
  rep.checks.push_back({"b", {}, Verdict::skipped, {}, {}, "", 0});
  EXPECT_EQ(rep.exit_code(), kExitResource);
  rep.checks.push_back({"c", {}, Verdict::fail, {}, {}, "", 0});
  EXPECT_EQ(rep.exit_code(), kExitFail);
  EXPECT_FALSE(rep.passed());
}

TEST(Suites, DeterministicAcrossJobs) {
  SuiteParams p;
  p.n_max = 5;
  p.jobs = 1;
  auto one = run_suite("fake-degrees", p).to_json().dump();
  p.jobs = 4;
  auto four = run_suite("fake-degrees", p).to_json().dump();
  EXPECT_EQ(one, four);
  SuiteParams g;
  g.jobs = 3;
  auto a = run_suite("graded-free", g);
  auto b = run_suite("graded-free", g);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.exit_code(), kExitPass);
  EXPECT_EQ(a.checks.size(), 53u);
  g.seed = 7;
  auto c = run_suite("graded-free", g);
  EXPECT_EQ(c.exit_code(), kExitPass);
  EXPECT_NE(a.to_json().dump(), c.to_json().dump());
}
