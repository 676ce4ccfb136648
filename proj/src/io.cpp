#include "ihpair/io.hpp"

#include <chrono>

namespace ihpair {

using nlohmann::json;

json request_to_json(const PairingRequest& req) {
  json j;
  j["target"] = target_name(req.target);
  j["r"] = req.spec.r;
  j["g"] = req.spec.g;
  if (req.spec.m) j["z"] = req.spec.m;
  if (!req.spec.a.empty()) {
    json a = json::object();
    for (const auto& [k, v] : req.spec.a) a[std::to_string(k)] = v;
    j["a"] = a;
  }
  if (!req.spec.f.empty()) {
    json f = json::object();
    for (const auto& [k, v] : req.spec.f) f[std::to_string(k)] = v;
    j["f"] = f;
  }
  if (!req.spec.b.empty()) {
    json b = json::array();
    for (const auto& [k, jj] : req.spec.b) b.push_back(json::array({k, jj}));
    j["b"] = b;
  }
  if (req.gamma) j["gamma"] = req.gamma;
  if (!req.label.empty()) j["label"] = req.label;
  return j;
}

namespace {

int get_int(const json& j, const char* key, int def, bool required = false) {
  if (!j.contains(key)) {
    if (required) throw SchemaError(std::string("missing field '") + key + "'");
    return def;
  }
  if (!j[key].is_number_integer()) throw SchemaError(std::string("field '") + key + "' not an integer");
  return j[key].get<int>();
}

}  // namespace

PairingRequest request_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("request is not an object");
  PairingRequest req;
  if (!j.contains("target") || !j["target"].is_string())
    throw SchemaError("missing or invalid 'target'");
  auto t = target_from_name(j["target"].get<std::string>());
  if (!t) throw SchemaError("unknown target '" + j["target"].get<std::string>() + "'");
  req.target = *t;
  req.spec.r = get_int(j, "r", 0, true);
  req.spec.g = get_int(j, "g", 0, true);
  if (req.spec.r < 2) throw SchemaError("r must be >= 2");
  if (req.spec.g < 2) throw SchemaError("g must be >= 2");
  req.spec.m = get_int(j, "z", 0);
  if (req.spec.m < 0) throw SchemaError("z must be >= 0");
  for (const char* key : {"a", "f"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_object()) throw SchemaError(std::string("field '") + key + "' not an object");
    for (const auto& [ks, v] : j[key].items()) {
      int k = std::atoi(ks.c_str());
      if (k < 2 || k > req.spec.r) throw SchemaError(std::string("bad class index in '") + key + "'");
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw SchemaError(std::string("bad exponent in '") + key + "'");
      int e = v.get<int>();
      if (e == 0) continue;
      if (key[0] == 'a')
        req.spec.a[k] = e;
      else
        req.spec.f[k] = e;
    }
  }
  if (j.contains("b")) {
    if (!j["b"].is_array()) throw SchemaError("field 'b' not an array");
    for (const auto& pair : j["b"]) {
      if (!pair.is_array() || pair.size() != 2) throw SchemaError("entries of 'b' must be [k,j]");
      int k = pair[0].get<int>(), jj = pair[1].get<int>();
      if (k < 2 || k > req.spec.r || jj < 1 || jj > 2 * req.spec.g)
        throw SchemaError("b entry out of range");
      if (!req.spec.b.emplace(k, jj).second) throw SchemaError("odd class squared");
    }
  }
  req.gamma = get_int(j, "gamma", 0);
  if (req.gamma < 0) throw SchemaError("gamma must be >= 0");
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw SchemaError("label must be a string");
    req.label = j["label"].get<std::string>();
  }
  return req;
}

json outcome_to_json(const RequestOutcome& out) {
  json j = request_to_json(out.request);
  j["value"] = {{"num", out.value.get_num().get_str()}, {"den", out.value.get_den().get_str()}};
  j["degree_ok"] = out.degree_ok;
  j["windows"] = {{"y_neg", out.windows.yneg},
                  {"y_pos", out.windows.ypos},
                  {"d2_lo", out.windows.d2lo},
                  {"d2_hi", out.windows.d2hi},
                  {"d_caps", out.windows.dcap}};
  j["family_index"] = out.family_index;
  j["ms"] = static_cast<long>(out.ms);
  j["engine"] = out.engine;
  return j;
}

std::string canonical_request(const PairingRequest& req) { return request_to_json(req).dump(); }

RequestOutcome evaluate_request(const PairingRequest& req, const EngineOptions& opt) {
  RequestOutcome out;
  out.request = req;
  auto t0 = std::chrono::steady_clock::now();
  if (req.gamma == 0) {
    PairingResult r = evaluate_pairing(req.target, req.spec, opt);
    out.value = r.value;
    out.degree_ok = r.degree_ok;
    out.windows = r.windows;
    out.family_index = r.family_index;
  } else {
    Rat total(0);
    bool degree_ok = true;
    PairingResult last;
    auto expansion = gamma_expand(req.gamma, req.spec.g);
    for (const auto& [coef, table] : expansion) {
      PairingSpec s = req.spec;
      for (const auto& kj : table)
        if (!s.b.insert(kj).second) throw SchemaError("odd class squared");
      last = evaluate_pairing(req.target, s, opt);
      degree_ok = degree_ok && last.degree_ok;
      total += coef * last.value;
    }
    out.value = total;
    out.degree_ok = expansion.empty() ? degree_check(req.target, req.spec) : degree_ok;
    out.windows = last.windows;
    out.family_index = opt.family_index > 0 ? opt.family_index : req.spec.r;
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string outcome_csv_header() { return "label,target,r,g,value,degree_ok,ms"; }

std::string outcome_csv_row(const RequestOutcome& out) {
  std::string row;
  row += out.request.label + ",";
  row += target_name(out.request.target) + ",";
  row += std::to_string(out.request.spec.r) + ",";
  row += std::to_string(out.request.spec.g) + ",";
  row += rat_str(out.value) + ",";
  row += (out.degree_ok ? "1" : "0");
  row += "," + std::to_string(static_cast<long>(out.ms));
  return row;
}

}  // namespace ihpair
