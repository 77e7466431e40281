#pragma once

#include <string>

#include <json.hpp>

#include "nshift/attack.hpp"
#include "nshift/endo.hpp"
#include "nshift/kex.hpp"
#include "nshift/platform.hpp"

namespace nshift {

using Json = nlohmann::ordered_json;

// Field elements: for p = 2 a lowercase hex string of ceil(d/8) bytes with
// the coefficient of x^i at bit i%8 of byte i/8; for odd p the coefficient
// list [c0, c1, ...] of length d.
Json encode_field_element(const FieldElement& x);
FieldElement decode_field_element(FieldRef field, const Json& j);

// {"ring":"field"|"group_algebra","p":..,"modulus":[[exp,coeff],...],
//  "group":"A5" (group algebras only),"n":..}
Json encode_platform(const PlatformSpec& spec);
PlatformRef decode_platform(const Json& j);

// Row-major array of n^2 entries. Group-algebra entries are sparse lists of
// [element-index, coefficient] pairs in ascending index order.
Json encode_matrix(const PlatformElement& a);
PlatformElement decode_matrix(const PlatformRef& spec, const Json& j);

// {"type":"identity"} | {"type":"inner","H":m} | {"type":"entry_power","e":int}
// | {"type":"compose","e":int,"H":m}. Decoding recomputes H^{-1}.
Json encode_endo(const Endomorphism& phi);
Endomorphism decode_endo(const PlatformRef& spec, const Json& j);

// All text formats are one JSON object on a single line plus '\n'.
std::string encode_transcript(const Transcript& t);
Transcript decode_transcript(const std::string& text);

struct SecretsFile {
  BigInt m;
  BigInt n;
  Json true_key;
};
std::string encode_secrets(const SessionSecrets& s);
std::string encode_secrets(const SecretsFile& s);
SecretsFile decode_secrets(const std::string& text);

struct ReportFile {
  std::string method;
  bool success = false;
  Json key;  // null on failure
  std::size_t basis_dim = 0;
  double elapsed_ms = 0;
};
std::string encode_report(const AttackReport& r);
std::string encode_report(const ReportFile& r);
ReportFile decode_report(const std::string& text);

}  // namespace nshift
