// cherpoi: tables, series, oracle runs, free-basis extraction and verification suites.
//
// Exit codes: 0 pass, 1 a check failed, 2 resource limit / skipped / unsaturated,
// 3 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "cherpoi/cache.hpp"
#include "cherpoi/tables.hpp"
#include "cherpoi/verifier.hpp"

using namespace cherpoi;

namespace {

std::pair<int, int> parse_pair(const std::string& s, const std::string& flag) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t used_a = 0, used_b = 0;
    int a = std::stoi(s.substr(0, comma), &used_a);
    int b = std::stoi(s.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != s.size() - comma - 1) throw std::invalid_argument("");
    if (a < 0 || b < 0) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidInput(flag + " expects A,B with nonnegative integers, got '" + s + "'");
  }
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::string body = s;
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::istringstream in(body);
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw InvalidInput("--mu expects comma-separated parts, got '" + s + "'");
    }
  }
  return Partition(parts);
}

std::string markdown_report(const SuiteReport& r, bool timings) {
  std::ostringstream out;
  out << "## " << r.suite << "\n\n";
  out << "pass " << r.count(Verdict::pass) << ", fail " << r.count(Verdict::fail) << ", unsaturated "
      << r.count(Verdict::unsaturated) << ", skipped " << r.count(Verdict::skipped) << "\n\n";
  out << "| check | params | verdict |" << (timings ? " seconds |" : "") << " note |\n";
  out << "|---|---|---|" << (timings ? "---|" : "") << "---|\n";
  for (const auto& c : r.checks) {
    out << "| " << c.name << " | `" << c.params.dump() << "` | " << to_string(c.verdict) << " |";
    if (timings) out << ' ' << c.seconds << " |";
    out << ' ' << c.note << " |\n";
  }
  return out.str();
}

int worst(int a, int b) {
  auto rank = [](int e) { return e == kExitFail ? 3 : e == kExitInput ? 2 : e == kExitResource ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert series, Kostka-Macdonald tables and their verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--cache-dir", cache_dir, "cache directory (default: $CHERPOI_CACHE, then the XDG cache)");
  app.add_flag("--no-cache", no_cache, "compute everything in memory");

  // table
  auto* table = app.add_subcommand("table", "character, Kostka-Macdonald or fake-degree table");
  std::string table_kind, table_format = "markdown";
  int table_n = 0;
  table->add_option("--kind", table_kind)->required()->check(CLI::IsMember({"characters", "kostka-macdonald", "fake-degrees"}));
  table->add_option("--n", table_n)->required()->check(CLI::Range(1, 12));
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv", "latex", "markdown"}));

  // series
  auto* series = app.add_subcommand("series", "closed-form Hilbert series");
  SeriesRequest req;
  std::string series_format = "text", series_window = "10,10", mu_text, grading_text;
  int series_d = 0, series_k = 0;
  series->add_option("--kind", req.kind)->required()->check(CLI::IsMember(series_kinds()));
  series->add_option("--n", req.n)->required()->check(CLI::Range(1, 12));
  auto* d_opt = series->add_option("--d", series_d)->check(CLI::NonNegativeNumber);
  auto* k_opt = series->add_option("--k", series_k)->check(CLI::NonNegativeNumber);
  auto* mu_opt = series->add_option("--mu", mu_text, "partition as 2,1");
  auto* grading_opt = series->add_option("--grading", grading_text)->check(CLI::IsMember({"h", "E"}));
  series->add_option("--window", series_window, "A,B: exponents -A..B in v, or the box [0,A]x[0,B] in s,t");
  series->add_option("--format", series_format)->check(CLI::IsMember({"json", "csv", "latex", "markdown", "text"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force dimensions in the diagonal coinvariant setting");
  int oracle_n = 2, oracle_d = 0, oracle_total = -1;
  std::string oracle_window, oracle_kind = "J", oracle_format = "csv";
  bool oracle_compare = false;
  oracle->add_option("--n", oracle_n)->required();
  oracle->add_option("--d", oracle_d)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-bidegree", oracle_window, "A,B")->required();
  oracle->add_option("--max-total", oracle_total, "cap on a + b");
  oracle->add_option("--kind", oracle_kind)->check(CLI::IsMember({"J", "Jbar"}));
  oracle->add_flag("--compare", oracle_compare, "compare with the closed form");
  oracle->add_option("--format", oracle_format)->check(CLI::IsMember({"csv", "json"}));

  // basis
  auto* basis = app.add_subcommand("basis", "homogeneous basis of the image of a graded idempotent");
  std::string basis_input, basis_format = "json";
  int basis_cutoff = 12;
  basis->add_option("--input", basis_input)->required();
  basis->add_option("--cutoff", basis_cutoff)->check(CLI::NonNegativeNumber);
  basis->add_option("--format", basis_format)->check(CLI::IsMember({"json", "text"}));

  // suite
  auto* suite = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name, suite_format = "json", suite_window;
  SuiteParams sp;
  int s_n = 0, s_n_max = 0, s_d = 0, s_k = 0, s_total = 0;
  bool timings = false;
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember(names));
  auto* sn = suite->add_option("--n", s_n);
  auto* snm = suite->add_option("--n-max", s_n_max);
  auto* sd = suite->add_option("--d", s_d);
  auto* sk = suite->add_option("--k", s_k);
  auto* sw = suite->add_option("--window", suite_window, "A,B");
  auto* st = suite->add_option("--max-total", s_total);
  suite->add_option("--seed", sp.seed);
  suite->add_option("--jobs", sp.jobs)->check(CLI::Range(1, 256));
  suite->add_flag("--timings", timings, "record per-check wall time (output is then not reproducible)");
  suite->add_option("--format", suite_format)->check(CLI::IsMember({"json", "markdown"}));

  // cache
  auto* cache = app.add_subcommand("cache", "manage the on-disk Kostka-Macdonald cache");
  cache->require_subcommand(1);
  auto* warm = cache->add_subcommand("warm", "compute and store matrices up to --n-max");
  int warm_n_max = 0;
  warm->add_option("--n-max", warm_n_max)->required()->check(CLI::Range(1, 12));
  auto* inspect = cache->add_subcommand("inspect", "list entries and their status");
  auto* purge = cache->add_subcommand("purge", "remove all entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    std::shared_ptr<const DiskCache> disk;
    if (!no_cache) {
      disk = std::make_shared<const DiskCache>(DiskCache::resolve(cache_dir));
      install_kostka_cache(disk);
    }

    if (*table) {
      std::cout << emit(emit_table_for(table_kind, table_n), table_format);
      return kExitPass;
    }

    if (*series) {
      if (*d_opt) req.d = series_d;
      if (*k_opt) req.k = series_k;
      if (*mu_opt) req.mu = parse_partition(mu_text);
      if (*grading_opt) {
        req.grading = grading_text == "E" ? Grading::E : Grading::h;
        req.grading_given = true;
      }
      std::cout << emit(compute_series(req), series_format, parse_pair(series_window, "--window"));
      return kExitPass;
    }

    if (*oracle) {
      auto [a, b] = parse_pair(oracle_window, "--max-bidegree");
      OracleWindow w{a, b, oracle_total};
      Json rows = Json::array();
      bool ok = true, saturated = true;
      std::ostringstream csv;
      if (oracle_kind == "J") {
        auto dims = ideal_power_dims(oracle_n, oracle_d, w);
        Poly2 formula = oracle_compare ? bigraded_J_window(oracle_n, oracle_d, a, b) : Poly2();
        csv << "a,b,dim" << (oracle_compare ? ",formula,match" : "") << '\n';
        for (const auto& [cell, v] : dims.dims) {
          Json row{{"a", cell.first}, {"b", cell.second}, {"dim", v}};
          csv << cell.first << ',' << cell.second << ',' << v;
          if (oracle_compare) {
            Rational f = formula.coefficient({cell.first, cell.second});
            row["formula"] = to_string(f);
            row["match"] = f == Rational(v);
            ok = ok && f == Rational(v);
            csv << ',' << to_string(f) << ',' << (f == Rational(v) ? "yes" : "no");
          }
          csv << '\n';
          rows.push_back(row);
        }
      } else {
        auto dd = jbar_dims(oracle_n, oracle_d, w);
        Poly1 formula = oracle_compare ? jbar_closed(oracle_n, oracle_d).expand_window({Direction::descending}, {{-b}, {a}}) : Poly1();
        csv << "diagonal,dim,saturated" << (oracle_compare ? ",formula,match" : "") << '\n';
        for (const auto& [g, v] : dd.dims) {
          const bool sat = dd.saturated.at(g);
          Json row{{"diagonal", g}, {"dim", v}, {"saturated", sat}};
          csv << g << ',' << v << ',' << (sat ? "yes" : "no");
          if (oracle_compare) {
            Rational f = formula.coefficient({g});
            const bool match = f == Rational(v);
            row["formula"] = to_string(f);
            row["match"] = match;
            // unsaturated diagonals are window artifacts; only the required band counts
            const bool required = g >= -std::min(a, b) / 2 && g <= a;
            row["required"] = required;
            if (sat) ok = ok && match;
            else if (required) saturated = false;
            csv << ',' << to_string(f) << ',' << (match ? "yes" : sat ? "no" : "unsaturated");
          }
          csv << '\n';
          rows.push_back(row);
        }
      }
      int code = !ok ? kExitFail : !saturated ? kExitResource : kExitPass;
      if (oracle_format == "csv") {
        std::cout << csv.str();
      } else {
        Json doc{{"schema", kReportSchemaVersion}, {"engine", kEngineVersion}, {"kind", oracle_kind}, {"n", oracle_n},
                 {"d", oracle_d}, {"window", {a, b}}, {"max_total", oracle_total}, {"rows", rows}};
        if (oracle_compare) doc["exit_code"] = code;
        std::cout << doc.dump(2) << '\n';
      }
      return code;
    }

    if (*basis) {
      auto idem = idempotent_from_json(Json::parse(read_file(basis_input)), basis_cutoff);
      auto b = extract_homogeneous_basis(idem);
      FreeModule f(idem.matrix.algebra, idem.shifts());
      if (basis_format == "json") {
        Json gens = Json::array();
        for (const auto& g : b.generators) gens.push_back(to_json(f, g));
        Json dims = Json::array();
        for (const auto& [deg, dim] : b.image_dims) dims.push_back({deg, dim});
        std::cout << Json{{"schema", kSeriesSchemaVersion}, {"horizon", b.horizon}, {"generators", gens}, {"image_dims", dims}}.dump(2) << '\n';
      } else {
        std::cout << "certified through degree " << b.horizon << '\n';
        for (const auto& g : b.generators) std::cout << "generator in degree " << g.degree << ": " << to_json(f, g)["components"].dump() << '\n';
      }
      return kExitPass;
    }

    if (*suite) {
      if (*sn) sp.n = s_n;
      if (*snm) sp.n_max = s_n_max;
      if (*sd) sp.d = s_d;
      if (*sk) sp.k = s_k;
      if (*sw) sp.window = parse_pair(suite_window, "--window");
      if (*st) sp.max_total = s_total;
      std::vector<std::string> run = suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
      std::vector<SuiteReport> reports;
      int code = kExitPass;
      for (const auto& name : run) {
        reports.push_back(run_suite(name, sp));
        code = worst(code, reports.back().exit_code());
      }
      if (suite_format == "markdown") {
        for (const auto& r : reports) std::cout << markdown_report(r, timings) << '\n';
      } else if (reports.size() == 1) {
        std::cout << reports[0].to_json(timings).dump(2) << '\n';
      } else {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(r.to_json(timings));
        std::cout << Json{{"schema", kReportSchemaVersion}, {"engine", kEngineVersion}, {"exit_code", code}, {"suites", all}}.dump(2) << '\n';
      }
      return code;
    }

    if (*cache) {
      if (!disk) throw InvalidInput("cache commands cannot be combined with --no-cache");
      if (*warm) {
        for (int n = 1; n <= warm_n_max; ++n) {
          kostka_macdonald(n);
          std::cout << "n=" << n << ' ' << to_string(disk->status(kKostkaKind, n)) << '\n';
        }
      } else if (*inspect) {
        std::cout << "directory " << disk->dir().string() << '\n';
        for (const auto& e : disk->inspect())
          std::cout << e.file << ' ' << to_string(e.status) << ' ' << e.bytes << " bytes\n";
      } else if (*purge) {
        std::cout << "removed " << disk->purge() << " files from " << disk->dir().string() << '\n';
      }
      return kExitPass;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const CertificationError& e) {
    std::cerr << "not certified: " << e.what() << " (first uncertified degree " << e.first_uncertified_degree() << ")\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInput;
}
