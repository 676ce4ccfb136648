#include "ihpair/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace ihpair {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

ResultCache::ResultCache(std::string dir) {
  if (dir.empty()) {
    const char* env = std::getenv("IHPAIR_CACHE_DIR");
    dir = env ? env : "./.ihpair-cache";
  }
  dir_ = fs::path(dir);
}

std::string ResultCache::key_for(const PairingRequest& req) const {
  return fnv1a_hex(std::string(kEngineVersion) + "\n" + canonical_request(req));
}

std::optional<RequestOutcome> ResultCache::lookup(const PairingRequest& req) const {
  fs::path file = dir_ / (key_for(req) + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    RequestOutcome out;
    out.request = request_from_json(j.at("request"));
    if (!(out.request == req)) return std::nullopt;  // hash collision
    const auto& v = j.at("value");
    out.value = rat_from_string(v.at("num").get<std::string>(), v.at("den").get<std::string>());
    out.degree_ok = j.at("degree_ok").get<bool>();
    out.family_index = j.at("family_index").get<int>();
    out.ms = j.at("ms").get<double>();
    out.engine = j.at("engine").get<std::string>();
    const auto& w = j.at("windows");
    out.windows.yneg = w.at("y_neg").get<int>();
    out.windows.ypos = w.at("y_pos").get<int>();
    out.windows.d2lo = w.at("d2_lo").get<int>();
    out.windows.d2hi = w.at("d2_hi").get<int>();
    out.windows.dcap = w.at("d_caps").get<std::vector<int>>();
    return out;
  } catch (...) {
    return std::nullopt;
  }
}

void ResultCache::store(const RequestOutcome& out) const {
  fs::create_directories(dir_);
  fs::path file = dir_ / (key_for(out.request) + ".json");
  nlohmann::json j;
  j["request"] = request_to_json(out.request);
  j["value"] = {{"num", out.value.get_num().get_str()}, {"den", out.value.get_den().get_str()}};
  j["degree_ok"] = out.degree_ok;
  j["family_index"] = out.family_index;
  j["ms"] = out.ms;
  j["engine"] = out.engine;
  j["windows"] = {{"y_neg", out.windows.yneg},
                  {"y_pos", out.windows.ypos},
                  {"d2_lo", out.windows.d2lo},
                  {"d2_hi", out.windows.d2hi},
                  {"d_caps", out.windows.dcap}};
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp);
    os << j.dump(2) << "\n";
  }
  fs::rename(tmp, file);  // atomic within one filesystem
}

ResultCache::Stats ResultCache::stats() const {
  Stats s;
  if (!fs::exists(dir_)) return s;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    ++s.entries;
    s.bytes += e.file_size();
  }
  return s;
}

size_t ResultCache::clear() const {
  size_t n = 0;
  if (!fs::exists(dir_)) return n;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file() || e.path().extension() != ".json") continue;
    fs::remove(e.path());
    ++n;
  }
  return n;
}

}  // namespace ihpair
