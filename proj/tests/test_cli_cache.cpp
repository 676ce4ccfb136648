#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "ihpair/cache.hpp"

using namespace ihpair;
namespace fs = std::filesystem;

namespace {

PairingRequest sample_request() {
  PairingRequest req;
  req.target = Target::IH;
  req.spec.r = 2;
  req.spec.g = 2;
  req.spec.f[2] = 3;
  req.label = "f cubed";
  return req;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ihpair-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("request json round-trips byte-exactly") {
  PairingRequest req = sample_request();
  req.spec.b = {{2, 1}, {2, 3}};
  std::string first = canonical_request(req);
  PairingRequest parsed = request_from_json(nlohmann::json::parse(first));
  CHECK(parsed == req);
  CHECK(canonical_request(parsed) == first);
}

TEST_CASE("schema violations are reported") {
  CHECK_THROWS_AS(request_from_json(nlohmann::json::parse(R"({"r":2,"g":2})")), SchemaError);
  CHECK_THROWS_AS(request_from_json(nlohmann::json::parse(R"({"target":"xx","r":2,"g":2})")),
                  SchemaError);
  CHECK_THROWS_AS(request_from_json(nlohmann::json::parse(R"({"target":"ih","r":2})")),
                  SchemaError);
  CHECK_THROWS_AS(
      request_from_json(nlohmann::json::parse(R"({"target":"ih","r":2,"g":2,"f":{"9":1}})")),
      SchemaError);
  CHECK_THROWS_AS(
      request_from_json(nlohmann::json::parse(
          R"({"target":"ih","r":2,"g":2,"b":[[2,1],[2,1]]})")),
      SchemaError);
}

TEST_CASE("cache stores and returns identical values") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  PairingRequest req = sample_request();
  CHECK_FALSE(cache.lookup(req).has_value());
  RequestOutcome out = evaluate_request(req);
  cache.store(out);
  auto hit = cache.lookup(req);
  REQUIRE(hit.has_value());
  CHECK(hit->value == out.value);
  CHECK(hit->request == req);
  CHECK(hit->engine == out.engine);
  CHECK(cache.stats().entries == 1);
  CHECK(cache.clear() == 1);
  CHECK(cache.stats().entries == 0);
}

TEST_CASE("cache transparency on randomized requests") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    PairingRequest req;
    req.target = static_cast<Target>(pick(rng));
    req.spec.r = 2;
    req.spec.g = 2;
    int m = pick(rng);
    int budget = 3 * (req.spec.g - 1);
    if (req.target == Target::P0) {
      req.spec.m = pick(rng) % 2;
      budget += 1 - req.spec.m;
    }
    while (2 * m > budget) --m;
    if (m) req.spec.a[2] = m;
    int n = budget - 2 * m;
    if (n) req.spec.f[2] = n;
    req.label = "t" + std::to_string(trial);
    RequestOutcome fresh = evaluate_request(req);
    cache.store(fresh);
    auto hit = cache.lookup(req);
    REQUIRE(hit.has_value());
    CHECK(hit->value == fresh.value);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("gamma requests expand and sum") {
  PairingRequest req;
  req.target = Target::IH;
  req.spec.r = 2;
  req.spec.g = 2;
  req.gamma = 1;
  RequestOutcome out = evaluate_request(req);
  CHECK(out.value == 2);
}

TEST_CASE("csv rows") {
  RequestOutcome out = evaluate_request(sample_request());
  CHECK(outcome_csv_header() == "label,target,r,g,value,degree_ok,ms");
  std::string row = outcome_csv_row(out);
  CHECK(row.substr(0, 8) == "f cubed,");
  CHECK(row.find(",ih,2,2,1,1,") != std::string::npos);
}
