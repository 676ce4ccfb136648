#ifndef IHPAIR_IO_HPP
#define IHPAIR_IO_HPP

#include <string>

#include <json.hpp>

#include "ihpair/pairings.hpp"

namespace ihpair {

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// One request record: a pairing spec plus the rank-2 gamma sugar and an
// optional label.
struct PairingRequest {
  Target target = Target::IH;
  PairingSpec spec;
  int gamma = 0;
  std::string label;

  bool operator==(const PairingRequest& o) const = default;
};

struct RequestOutcome {
  PairingRequest request;
  Rat value;
  bool degree_ok = true;
  EngineWindow windows;
  int family_index = 0;
  double ms = 0.0;
  std::string engine = kEngineVersion;
};

nlohmann::json request_to_json(const PairingRequest& req);
PairingRequest request_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const RequestOutcome& out);

// canonical bytes of a request (sorted keys, no whitespace)
std::string canonical_request(const PairingRequest& req);

// evaluate one request (gamma expanded into l-tables and summed)
RequestOutcome evaluate_request(const PairingRequest& req, const EngineOptions& opt = {});

std::string outcome_csv_header();
std::string outcome_csv_row(const RequestOutcome& out);

}  // namespace ihpair

#endif
