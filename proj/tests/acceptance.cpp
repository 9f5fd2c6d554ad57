// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include "cherpoi/verifier.hpp"

using namespace cherpoi;

namespace {

struct Tally {
  std::size_t pass = 0, fail = 0, other = 0;
  std::vector<std::string> bad;

  void add(const CheckResult& c) {
    if (c.verdict == Verdict::pass) {
      ++pass;
      return;
    }
    ++(c.verdict == Verdict::fail ? fail : other);
    if (bad.size() < 3) bad.push_back(c.name + " " + c.params.dump() + " " + to_string(c.verdict));
  }
  void add(const SuiteReport& r, const std::function<bool(const CheckResult&)>& keep = {}) {
    for (const auto& c : r.checks)
      if (!keep || keep(c)) add(c);
  }
  bool ok() const { return pass > 0 && fail == 0 && other == 0; }
};

bool named(const CheckResult& c, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (c.name == n) return true;
  return false;
}

}  // namespace

int main() {
  SuiteParams p;
  p.jobs = static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));

  std::map<std::string, SuiteReport> reports;
  std::map<std::string, double> seconds;
  for (const auto& name : suite_names()) {
    auto t0 = std::chrono::steady_clock::now();
    reports[name] = run_suite(name, p);
    seconds[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  struct Criterion {
    std::string id;
    std::string what;
    Tally tally;
    bool extra = true;
  };
  std::vector<Criterion> acs;

  auto only = [](std::initializer_list<const char*> names) { return [names](const CheckResult& c) { return named(c, names); }; };
  auto except = [](std::initializer_list<const char*> names) { return [names](const CheckResult& c) { return !named(c, names); }; };

  Tally t;
  t.add(reports["fake-degrees"]);
  acs.push_back({"AC-1", "fake degrees n<=8: hook = maj, transpose symmetry, sum identity", t});

  t = {};
  t.add(reports["coinvariants"]);
  acs.push_back({"AC-2", "coinvariant multiplicities n<=4 equal fake-degree coefficients", t});

  t = {};
  t.add(reports["kostka"], except({"trivial-target"}));
  acs.push_back({"AC-3", "Kostka-Macdonald n<=5: certified, in N[q,t], value at 1, n=2 matrix", t});

  t = {};
  t.add(reports["kostka"], only({"trivial-target"}));
  acs.push_back({"AC-4", "J^0 collapses to 1/((1-s)(1-t))^{n-1} for n=2,3,4", t});

  t = {};
  t.add(reports["oracle-J"]);
  acs.push_back({"AC-5", "oracle ideal powers vs J^d window (n=2 d<=3 10x10; n=3 d<=2 total<=8)", t});

  Tally ac6;
  ac6.add(reports["jbar-chain"], only({"closed-vs-specialization"}));
  ac6.add(reports["oracle-jbar"]);
  acs.push_back({"AC-6", "Jbar closed = specialization n<=5 d<=3; oracle diagonals n<=3 d<=2", ac6});

  t = {};
  t.add(reports["eqpoi"]);
  acs.push_back({"AC-7", "v^{kN} Jbar(n,k) = Nbar(n,k,E) for n<=5 k<=3", t});

  t = {};
  t.add(reports["appendix-b"]);
  acs.push_back({"AC-8", "Mbar(n,k,E) = v^{kN} Jbar(n,k-1)/[n]_v! for n<=5 1<=k<=3", t});

  t = {};
  t.add(reports["parity"]);
  acs.push_back({"AC-9", "isotypic parity check n<=3 d<=3", t});

  t = {};
  t.add(reports["graded-free"]);
  acs.push_back({"AC-10", "graded-free extraction: identity, projection, 50 random conjugates", t});

  t = {};
  t.add(reports["jbar-chain"], only({"fake-degree-identity", "exactly-one-variant"}));
  acs.push_back({"AC-11", "fake-degree identity n<=5: exactly one variant holds and AC-6 passes", t, ac6.ok()});

  int failed = 0;
  for (const auto& ac : acs) {
    const bool ok = ac.tally.ok() && ac.extra;
    failed += !ok;
    std::printf("%s %s  %s  [%zu pass, %zu fail, %zu skipped/unsaturated]\n", ac.id.c_str(), ok ? "PASS" : "FAIL", ac.what.c_str(),
                ac.tally.pass, ac.tally.fail, ac.tally.other);
    for (const auto& b : ac.tally.bad) std::printf("    %s\n", b.c_str());
    if (!ac.extra) std::printf("    depends on AC-6, which failed\n");
  }
  for (const auto& [name, s] : seconds) std::printf("# %-22s %.2fs\n", name.c_str(), s);
  return failed ? 1 : 0;
}
