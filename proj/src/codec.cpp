#include "nshift/codec.hpp"

#include <cstdio>

#include "nshift/errors.hpp"

namespace nshift {

namespace {

Json parse_line(const std::string& text) {
  if (text.empty() || text.back() != '\n') throw FormatError("record must end with a newline");
  try {
    Json j = Json::parse(text);
    if (!j.is_object()) throw FormatError("record must be a JSON object");
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

// Checks the object has exactly the given keys, in order.
void expect_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object() || j.size() != keys.size()) throw FormatError("unexpected field set");
  auto it = j.begin();
  for (const char* k : keys) {
    if (it.key() != k) throw FormatError(std::string("expected field '") + k + "'");
    ++it;
  }
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("bad value for ") + what);
  }
}

Json encode_big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

BigInt decode_big(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError(std::string("bad integer for ") + what);
    return BigInt(s);
  }
  throw FormatError(std::string("bad integer for ") + what);
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

Json encode_field_element(const FieldElement& x) {
  FieldRef f = x.spec();
  const unsigned d = f->degree();
  if (f->characteristic() == 2) {
    static const char* digits = "0123456789abcdef";
    const unsigned bytes = (d + 7) / 8;
    std::string s;
    s.reserve(2 * bytes);
    for (unsigned b = 0; b < bytes; ++b) {
      unsigned v = 0;
      for (unsigned bit = 0; bit < 8; ++bit) v |= static_cast<unsigned>(x.coeff(8 * b + bit)) << bit;
      s.push_back(digits[v >> 4]);
      s.push_back(digits[v & 15]);
    }
    return s;
  }
  Json arr = Json::array();
  for (unsigned i = 0; i < d; ++i) arr.push_back(x.coeff(i));
  return arr;
}

FieldElement decode_field_element(FieldRef f, const Json& j) {
  const unsigned d = f->degree();
  const std::uint64_t p = f->characteristic();
  std::vector<std::uint64_t> c(d, 0);
  if (p == 2) {
    if (!j.is_string()) throw FormatError("GF(2^d) element must be a hex string");
    const auto& s = j.get_ref<const std::string&>();
    if (s.size() != 2 * ((d + 7) / 8)) throw FormatError("hex field element has the wrong length");
    for (std::size_t b = 0; b < s.size() / 2; ++b) {
      const int hi = hex_digit(s[2 * b]), lo = hex_digit(s[2 * b + 1]);
      if (hi < 0 || lo < 0) throw FormatError("invalid hex digit");
      const unsigned v = static_cast<unsigned>(hi * 16 + lo);
      for (unsigned bit = 0; bit < 8; ++bit) {
        if (!((v >> bit) & 1)) continue;
        const std::size_t i = 8 * b + bit;
        if (i >= d) throw FormatError("hex field element sets bits beyond the degree");
        c[i] = 1;
      }
    }
    return f->from_coeffs(c);
  }
  if (!j.is_array() || j.size() != d) throw FormatError("field element must be a coefficient list of length d");
  for (unsigned i = 0; i < d; ++i) {
    if (!j[i].is_number_unsigned()) throw FormatError("coefficient must be a nonnegative integer");
    c[i] = j[i].get<std::uint64_t>();
    if (c[i] >= p) throw FormatError("coefficient out of range");
  }
  return f->from_coeffs(c);
}

Json encode_platform(const PlatformSpec& spec) {
  Json j;
  j["ring"] = spec.over_field() ? "field" : "group_algebra";
  j["p"] = spec.field()->characteristic();
  Json mod = Json::array();
  const auto& m = spec.field()->modulus();
  for (std::size_t i = m.size(); i-- > 0;)
    if (m[i]) mod.push_back(Json::array({i, m[i]}));
  j["modulus"] = mod;
  if (!spec.over_field()) j["group"] = spec.group()->name();
  j["n"] = spec.n();
  return j;
}

PlatformRef decode_platform(const Json& j) {
  if (!j.is_object() || !j.contains("ring")) throw FormatError("platform must be an object with a ring");
  const std::string ring = get_as<std::string>(j["ring"], "ring");
  if (ring == "field")
    expect_keys(j, {"ring", "p", "modulus", "n"});
  else if (ring == "group_algebra")
    expect_keys(j, {"ring", "p", "modulus", "group", "n"});
  else
    throw FormatError("unknown ring kind");
  const auto p = get_as<std::uint64_t>(j["p"], "p");
  const auto n = get_as<std::size_t>(j["n"], "n");
  if (!j["modulus"].is_array() || j["modulus"].empty()) throw FormatError("modulus must be a term list");
  poly::Poly mod;
  for (const auto& term : j["modulus"]) {
    if (!term.is_array() || term.size() != 2) throw FormatError("modulus term must be [exp, coeff]");
    const auto e = get_as<std::size_t>(term[0], "modulus exponent");
    const auto c = get_as<std::uint64_t>(term[1], "modulus coefficient");
    if (e > 4096) throw FormatError("modulus degree too large");
    if (mod.size() <= e) mod.resize(e + 1, 0);
    mod[e] = c;
  }
  try {
    FieldRef f = FieldSpec::extension(p, mod);
    if (ring == "field") return make_field_platform(f, n);
    return make_group_algebra_platform(f, group_by_name(get_as<std::string>(j["group"], "group")), n);
  } catch (const ValidationError& e) {
    throw FormatError(std::string("invalid platform: ") + e.what());
  }
}

Json encode_matrix(const PlatformElement& a) {
  Json arr = Json::array();
  const auto& spec = *a.spec();
  const std::size_t w = spec.width();
  for (std::size_t e = 0; e < spec.n() * spec.n(); ++e) {
    if (spec.over_field()) {
      arr.push_back(encode_field_element(a.coeffs()[e]));
      continue;
    }
    Json sparse = Json::array();
    for (std::size_t g = 0; g < w; ++g) {
      const FieldElement& c = a.coeffs()[e * w + g];
      if (!c.is_zero()) sparse.push_back(Json::array({g, encode_field_element(c)}));
    }
    arr.push_back(sparse);
  }
  return arr;
}

PlatformElement decode_matrix(const PlatformRef& spec, const Json& j) {
  const std::size_t entries = spec->n() * spec->n();
  if (!j.is_array() || j.size() != entries) throw FormatError("matrix must be a row-major array of n^2 entries");
  FieldRef f = spec->field();
  std::vector<FieldElement> coeffs;
  coeffs.reserve(spec->coeff_count());
  const std::size_t w = spec->width();
  for (std::size_t e = 0; e < entries; ++e) {
    if (spec->over_field()) {
      coeffs.push_back(decode_field_element(f, j[e]));
      continue;
    }
    std::vector<FieldElement> entry(w, f->zero());
    if (!j[e].is_array()) throw FormatError("group-algebra entry must be a sparse list");
    std::size_t last = 0;
    bool first = true;
    for (const auto& pair : j[e]) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("sparse term must be [index, coeff]");
      const auto g = get_as<std::size_t>(pair[0], "group index");
      if (g >= w || (!first && g <= last)) throw FormatError("group indices must be ascending and in range");
      FieldElement c = decode_field_element(f, pair[1]);
      if (c.is_zero()) throw FormatError("sparse list must omit zero coefficients");
      entry[g] = c;
      last = g;
      first = false;
    }
    coeffs.insert(coeffs.end(), entry.begin(), entry.end());
  }
  return PlatformElement(spec, std::move(coeffs));
}

Json encode_endo(const Endomorphism& phi) {
  Json j;
  switch (phi.kind()) {
    case Endomorphism::Kind::Identity:
      j["type"] = "identity";
      break;
    case Endomorphism::Kind::Inner:
      j["type"] = "inner";
      j["H"] = encode_matrix(phi.H());
      break;
    case Endomorphism::Kind::EntryPower:
      j["type"] = "entry_power";
      j["e"] = encode_big(phi.exponent());
      break;
    case Endomorphism::Kind::Compose:
      j["type"] = "compose";
      j["e"] = encode_big(phi.exponent());
      j["H"] = encode_matrix(phi.H());
      break;
  }
  return j;
}

namespace {

PlatformElement public_inverse(const PlatformElement& H) {
  try {
    return H.spec()->over_field() ? mat_inverse(H) : inverse_via_minimal_polynomial(H);
  } catch (const SingularMatrix&) {
    throw FormatError("conjugating matrix is not invertible");
  }
}

}  // namespace

Endomorphism decode_endo(const PlatformRef& spec, const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw FormatError("endomorphism must have a type");
  const std::string type = get_as<std::string>(j["type"], "type");
  try {
    if (type == "identity") {
      expect_keys(j, {"type"});
      return Endomorphism::identity(spec);
    }
    if (type == "inner") {
      expect_keys(j, {"type", "H"});
      PlatformElement H = decode_matrix(spec, j["H"]);
      return Endomorphism::inner(H, public_inverse(H));
    }
    if (type == "entry_power") {
      expect_keys(j, {"type", "e"});
      return Endomorphism::entry_power(spec, decode_big(j["e"], "e"));
    }
    if (type == "compose") {
      expect_keys(j, {"type", "e", "H"});
      PlatformElement H = decode_matrix(spec, j["H"]);
      return Endomorphism::compose(decode_big(j["e"], "e"), H, public_inverse(H));
    }
  } catch (const ValidationError& e) {
    throw FormatError(std::string("invalid endomorphism: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid endomorphism: ") + e.what());
  }
  throw FormatError("unknown endomorphism type '" + type + "'");
}

std::string encode_transcript(const Transcript& t) {
  Json j;
  j["platform"] = encode_platform(*t.platform);
  j["phi"] = encode_endo(t.phi);
  j["g"] = encode_matrix(t.g);
  j["alice"] = encode_matrix(t.alice);
  j["bob"] = encode_matrix(t.bob);
  j["masked"] = t.masked;
  return j.dump() + "\n";
}

Transcript decode_transcript(const std::string& text) {
  Json j = parse_line(text);
  expect_keys(j, {"platform", "phi", "g", "alice", "bob", "masked"});
  PlatformRef spec = decode_platform(j["platform"]);
  if (!j["masked"].is_boolean()) throw FormatError("masked must be a boolean");
  return Transcript{spec,
                    decode_endo(spec, j["phi"]),
                    decode_matrix(spec, j["g"]),
                    decode_matrix(spec, j["alice"]),
                    decode_matrix(spec, j["bob"]),
                    j["masked"].get<bool>()};
}

std::string encode_secrets(const SessionSecrets& s) {
  return encode_secrets(SecretsFile{s.m, s.n, encode_matrix(s.true_key)});
}

std::string encode_secrets(const SecretsFile& s) {
  Json j;
  j["m"] = s.m.str();
  j["n"] = s.n.str();
  j["true_key"] = s.true_key;
  return j.dump() + "\n";
}

SecretsFile decode_secrets(const std::string& text) {
  Json j = parse_line(text);
  expect_keys(j, {"m", "n", "true_key"});
  if (!j["m"].is_string() || !j["n"].is_string()) throw FormatError("m and n must be decimal strings");
  if (!j["true_key"].is_array()) throw FormatError("true_key must be a matrix");
  return SecretsFile{decode_big(j["m"], "m"), decode_big(j["n"], "n"), j["true_key"]};
}

std::string encode_report(const AttackReport& r) {
  return encode_report(ReportFile{method_name(r.method), r.success, r.key ? encode_matrix(*r.key) : Json(nullptr),
                                  r.basis_dim, r.elapsed_ms});
}

std::string encode_report(const ReportFile& r) {
  Json j;
  j["method"] = r.method;
  j["success"] = r.success;
  j["key"] = r.key;
  j["basis_dim"] = r.basis_dim;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump() + "\n";
}

ReportFile decode_report(const std::string& text) {
  Json j = parse_line(text);
  expect_keys(j, {"method", "success", "key", "basis_dim", "elapsed_ms"});
  ReportFile r;
  r.method = get_as<std::string>(j["method"], "method");
  try {
    parse_method(r.method);
  } catch (const ValidationError&) {
    throw FormatError("unknown method in report");
  }
  if (!j["success"].is_boolean()) throw FormatError("success must be a boolean");
  r.success = j["success"].get<bool>();
  r.key = j["key"];
  if (!(r.key.is_null() || r.key.is_array())) throw FormatError("key must be a matrix or null");
  if (r.success != r.key.is_array()) throw FormatError("success must agree with key presence");
  r.basis_dim = get_as<std::size_t>(j["basis_dim"], "basis_dim");
  if (!j["elapsed_ms"].is_number()) throw FormatError("elapsed_ms must be a number");
  r.elapsed_ms = j["elapsed_ms"].get<double>();
  return r;
}

}  // namespace nshift
