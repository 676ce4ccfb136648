// ihpair: exact intersection pairings on moduli of bundles via iterated
// residues.  Subcommands: pair, verify, batch, cache.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ihpair/cache.hpp"
#include "ihpair/verify.hpp"

using namespace ihpair;

namespace {

struct GlobalFlags {
  int hamiltonian_index = 0;
  int window_bump = 0;
  bool debug_no_cancel = false;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
};

EngineOptions options_from(const GlobalFlags& gf) {
  EngineOptions opt;
  opt.family_index = gf.hamiltonian_index;
  opt.window_bump = gf.window_bump;
  opt.debug_no_cancel = gf.debug_no_cancel;
  return opt;
}

// parse "k=v" pairs for --a / --f
std::pair<int, int> parse_kv(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw CLI::ValidationError("expected k=v, got '" + s + "'");
  return {std::stoi(s.substr(0, eq)), std::stoi(s.substr(eq + 1))};
}

std::pair<int, int> parse_kj(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("expected k,j, got '" + s + "'");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

RequestOutcome evaluate_with_cache(const PairingRequest& req, const GlobalFlags& gf) {
  EngineOptions opt = options_from(gf);
  if (gf.no_cache || gf.debug_no_cancel || gf.window_bump != 0 || gf.hamiltonian_index != 0)
    return evaluate_request(req, opt);  // only canonical runs are cached
  ResultCache cache(gf.cache_dir);
  if (auto hit = cache.lookup(req)) return *hit;
  RequestOutcome out = evaluate_request(req, opt);
  cache.store(out);
  return out;
}

void print_outcome(const RequestOutcome& out, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << outcome_to_json(out).dump(2) << "\n";
  } else if (format == "csv") {
    os << outcome_csv_header() << "\n" << outcome_csv_row(out) << "\n";
  } else {
    if (!out.degree_ok) os << "degree mismatch for the requested target; pairing vanishes\n";
    os << rat_str(out.value) << "\n";
  }
}

int report_suites(const std::vector<SuiteReport>& reports, std::ostream& os) {
  int failed = 0;
  for (const auto& rep : reports) {
    size_t pass = 0;
    for (const auto& c : rep.checks) pass += c.pass;
    os << "suite " << rep.suite << ": " << pass << "/" << rep.checks.size() << " checks pass\n";
    for (const auto& c : rep.checks)
      if (!c.pass) {
        os << "  FAIL " << c.name << ": " << c.detail << "\n";
        ++failed;
      }
  }
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection pairings via iterated residues"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags gf;
  app.add_option("--hamiltonian-index", gf.hamiltonian_index,
                 "family index n (default: r)");
  app.add_option("--window-bump", gf.window_bump, "widen truncation windows");
  app.add_flag("--debug-no-cancel", gf.debug_no_cancel,
               "expand and invert the Hessian determinant instead of cancelling");
  app.add_option("--format", gf.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", gf.cache_dir, "cache directory (default: $IHPAIR_CACHE_DIR)");
  app.add_flag("--no-cache", gf.no_cache, "bypass the result cache");

  // ---- pair ----
  auto* pair = app.add_subcommand("pair", "evaluate one pairing");
  pair->fallthrough();
  std::string target = "ih";
  PairingRequest preq;
  std::vector<std::string> a_opts, f_opts, b_opts;
  pair->add_option("--target", target, "ih | m1 | p0")
      ->check(CLI::IsMember({"ih", "m1", "p0"}));
  pair->add_option("-r", preq.spec.r, "rank")->required();
  pair->add_option("-g", preq.spec.g, "genus")->required();
  pair->add_option("--a", a_opts, "a-class exponent k=m (repeatable)");
  pair->add_option("--f", f_opts, "f-class exponent k=n (repeatable)");
  pair->add_option("--b", b_opts, "b-class factor k,j (repeatable)");
  pair->add_option("--z", preq.spec.m, "z-class exponent");
  pair->add_option("--gamma", preq.gamma, "gamma power (rank-2 sugar)");
  pair->add_option("--label", preq.label, "request label");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite = "all";
  int vr = 0, vg = 0;
  verify->add_option("--suite", suite, "suite name (default: all)");
  verify->add_option("-r", vr, "rank scale override");
  verify->add_option("-g", vg, "genus scale override");

  // ---- batch ----
  auto* batch = app.add_subcommand("batch", "evaluate a JSON request file");
  batch->fallthrough();
  std::string batch_file, batch_out;
  batch->add_option("file", batch_file, "input JSON (array of requests)")->required();
  batch->add_option("-o,--output", batch_out, "output file (default: stdout)");

  // ---- cache ----
  auto* cachecmd = app.add_subcommand("cache", "cache maintenance");
  cachecmd->fallthrough();
  auto* cstats = cachecmd->add_subcommand("stats", "show entry count and size");
  auto* cclear = cachecmd->add_subcommand("clear", "remove all entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pair) {
      if (auto t = target_from_name(target)) preq.target = *t;
      for (const auto& s : a_opts) {
        auto [k, v] = parse_kv(s);
        if (v) preq.spec.a[k] = v;
      }
      for (const auto& s : f_opts) {
        auto [k, v] = parse_kv(s);
        if (v) preq.spec.f[k] = v;
      }
      for (const auto& s : b_opts) {
        auto kj = parse_kj(s);
        if (!preq.spec.b.insert(kj).second) {
          std::cerr << "error: odd class squared: b " << kj.first << "," << kj.second << "\n";
          return 2;
        }
      }
      // validate through the schema used by batch
      PairingRequest req = request_from_json(request_to_json(preq));
      RequestOutcome out = evaluate_with_cache(req, gf);
      print_outcome(out, gf.format, std::cout);
      return 0;
    }
    if (*verify) {
      auto reports = run_suite(suite, vr, vg);
      int failed = report_suites(reports, std::cout);
      return failed == 0 ? 0 : 1;
    }
    if (*batch) {
      std::ifstream in(batch_file);
      if (!in) {
        std::cerr << "error: cannot open " << batch_file << "\n";
        return 2;
      }
      nlohmann::json j;
      try {
        in >> j;
      } catch (const std::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 2;
      }
      if (!j.is_array()) {
        std::cerr << "error: batch input must be a JSON array\n";
        return 2;
      }
      std::vector<PairingRequest> reqs;
      for (size_t i = 0; i < j.size(); ++i) {
        try {
          reqs.push_back(request_from_json(j[i]));
        } catch (const SchemaError& e) {
          std::cerr << "error: record " << i << ": " << e.what() << "\n";
          return 2;
        }
      }
      std::vector<RequestOutcome> outs(reqs.size());
      std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < static_cast<int>(reqs.size()); ++i) {
        try {
          outs[i] = evaluate_with_cache(reqs[i], gf);
        } catch (...) {
#pragma omp critical
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);

      std::ostringstream body;
      if (gf.format == "csv") {
        body << outcome_csv_header() << "\n";
        for (const auto& o : outs) body << outcome_csv_row(o) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& o : outs) arr.push_back(outcome_to_json(o));
        body << arr.dump(2) << "\n";
      }
      if (batch_out.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream os(batch_out);
        os << body.str();
      }
      return 0;
    }
    if (*cachecmd) {
      ResultCache cache(gf.cache_dir);
      if (*cstats) {
        auto s = cache.stats();
        std::cout << "entries " << s.entries << "\nbytes " << s.bytes << "\n";
      } else if (*cclear) {
        std::cout << "removed " << cache.clear() << " entries\n";
      } else {
        std::cerr << "error: cache needs a subcommand (stats | clear)\n";
        return 2;
      }
      return 0;
    }
  } catch (const TruncationTooSmall& e) {
    std::cerr << "error: " << e.what() << " after retries; raise --window-bump\n";
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
