// nshift: simulate noncommutative-shift key exchanges and break them.
//
//   nshift simulate --platform kls2x2 --seed 7 --out t.json --secrets s.json
//   nshift attack t.json --method conjugation --report r.json
//   nshift check --report r.json --secrets s.json
//   nshift bench --platform kls2x2 --trials 10
//   nshift selftest
//
// Exit codes: 0 success, 1 the attack (or check) reported failure,
// 2 usage, configuration or file-format error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nshift/attack.hpp"
#include "nshift/codec.hpp"
#include "nshift/errors.hpp"
#include "nshift/presets.hpp"

namespace {

using namespace nshift;

constexpr int kOk = 0;
constexpr int kMethodFailure = 1;
constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

BigInt parse_bound(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("--exp-bound must be a decimal integer");
  return BigInt(s);
}

Method infer_method(const Transcript& t) {
  if (t.masked) return Method::Masked;
  if (t.phi.kind() == Endomorphism::Kind::Inner && t.platform->over_field()) return Method::Conjugation;
  return Method::General;
}

int cmd_simulate(const RunConfig& cfg, const std::string& out, const std::string& secrets) {
  Session s = simulate_session(cfg);
  write_file(out, encode_transcript(s.transcript));
  if (!secrets.empty()) write_file(secrets, encode_secrets(s.secrets));
  return kOk;
}

int cmd_attack(const std::string& method_flag, const std::string& transcript_path, const std::string& report_path) {
  Transcript t = decode_transcript(read_file(transcript_path));
  const Method method = method_flag.empty() ? infer_method(t) : parse_method(method_flag);
  AttackReport rep = run_attack(method, t);
  write_file(report_path, encode_report(rep));
  if (!rep.success) {
    std::cerr << "attack " << method_name(method) << " failed: " << rep.note << "\n";
    return kMethodFailure;
  }
  return kOk;
}

int cmd_check(const std::string& report_path, const std::string& secrets_path) {
  ReportFile rep = decode_report(read_file(report_path));
  SecretsFile sec = decode_secrets(read_file(secrets_path));
  if (!rep.success) {
    std::cerr << "report carries no key\n";
    return kMethodFailure;
  }
  if (rep.key.dump() != sec.true_key.dump()) {
    std::cerr << "recovered key differs from the true key\n";
    return kMethodFailure;
  }
  std::cout << "key recovered exactly\n";
  return kOk;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

int cmd_bench(const RunConfig& base, std::size_t trials, const std::string& method_flag) {
  const PlatformChoice choice = parse_platform_choice(base.platform);
  const Method method = method_flag.empty() ? default_method(choice, base.masked) : parse_method(method_flag);
  // header on stderr: stdout carries exactly one line per trial plus the summary
  std::fprintf(stderr, "%-6s %-20s %12s %12s %12s %12s %9s %3s\n", "trial", "seed", "session_ms", "offline_ms",
               "express_ms", "assemble_ms", "basis_dim", "ok");
  std::vector<double> offline, online;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    RunConfig cfg = base;
    cfg.seed = base.seed + i;
    const auto t0 = std::chrono::steady_clock::now();
    Session s = simulate_session(cfg);
    const double session_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    AttackReport rep = run_attack(method, s.transcript);
    const bool good = rep.success && *rep.key == s.secrets.true_key;
    ok += good;
    offline.push_back(rep.phases.offline_ms);
    online.push_back(rep.phases.express_ms + rep.phases.assemble_ms);
    std::printf("%-6zu %-20llu %12.3f %12.3f %12.3f %12.3f %9zu %3s\n", i,
                static_cast<unsigned long long>(cfg.seed), session_ms, rep.phases.offline_ms, rep.phases.express_ms,
                rep.phases.assemble_ms, rep.basis_dim, good ? "yes" : "no");
  }
  std::printf("summary platform=%s method=%s trials=%zu recovered=%zu median_offline_ms=%.3f median_online_ms=%.3f\n",
              base.platform.c_str(), method_name(method).c_str(), trials, ok, median(offline), median(online));
  return ok == trials ? kOk : kMethodFailure;
}

int cmd_selftest() {
  struct Case {
    const char* platform;
    bool masked;
    Method method;
    const char* bound;
  };
  const Case cases[] = {
      {"toy:7,1,2", false, Method::General, "1000"},     {"toy:7,1,2", false, Method::Conjugation, "1000"},
      {"toy:7,1,2", false, Method::Commutant, "1000"},   {"toy:7,1,2", true, Method::Masked, "1000"},
      {"toy:3,2,3", false, Method::General, "1000"},     {"kls2x2", false, Method::Conjugation, ""},
      {"kls2x2", false, Method::General, ""},            {"kls2x2", true, Method::Masked, ""},
      {"kls2x2-power4", false, Method::General, ""},     {"hkks3x3", false, Method::General, "50"},
  };
  int failures = 0;
  std::uint64_t seed = 1;
  for (const auto& c : cases) {
    RunConfig cfg;
    cfg.platform = c.platform;
    cfg.masked = c.masked;
    cfg.seed = seed++;
    if (*c.bound) cfg.exp_bound = BigInt(c.bound);
    Session s = simulate_session(cfg);
    AttackReport rep = run_attack(c.method, s.transcript);
    const bool good = rep.success && *rep.key == s.secrets.true_key;
    failures += !good;
    std::printf("%-4s %-14s %-7s %-12s basis_dim=%zu %.1f ms\n", good ? "ok" : "FAIL", c.platform,
                c.masked ? "masked" : "plain", method_name(c.method).c_str(), rep.basis_dim, rep.elapsed_ms);
  }
  return failures == 0 ? kOk : kMethodFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncommutative shift key exchange: simulation and linear decomposition attacks"};
  app.require_subcommand(1);

  std::string platform = "kls2x2", seed_text = "1", bound_text, method, out, secrets, report, transcript;
  bool masked = false;
  std::size_t trials = 10;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--platform", platform, "kls2x2 | kls2x2-power4 | hkks3x3 | toy:p,d,n");
    sub->add_flag("--masked", masked, "masked variant (publishes a_m + R)");
    sub->add_option("--seed", seed_text, "seed for all randomness");
    sub->add_option("--exp-bound", bound_text, "private exponents are uniform in [2, bound] (default 2^64)");
  };

  auto* simulate = app.add_subcommand("simulate", "run an honest session and write its transcript");
  add_run_flags(simulate);
  simulate->add_option("--out", out, "transcript path (stdout if omitted)");
  simulate->add_option("--secrets", secrets, "secrets path, for verification only");

  auto* attack = app.add_subcommand("attack", "recover the shared key from a transcript");
  attack->add_option("transcript,--transcript", transcript, "transcript path");
  attack->add_option("--method", method, "general | conjugation | masked | commutant");
  attack->add_option("--report", report, "report path (stdout if omitted)");

  auto* check = app.add_subcommand("check", "compare a report's key with the true key");
  check->add_option("--report", report)->required();
  check->add_option("--secrets", secrets)->required();

  auto* bench = app.add_subcommand("bench", "time session generation and attack phases");
  add_run_flags(bench);
  bench->add_option("--trials", trials, "number of trials");
  bench->add_option("--method", method, "attack method (default depends on platform)");

  auto* selftest = app.add_subcommand("selftest", "simulate and break one session per configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    RunConfig cfg;
    cfg.platform = platform;
    cfg.masked = masked;
    cfg.seed = std::stoull(seed_text);
    if (!bound_text.empty()) cfg.exp_bound = parse_bound(bound_text);

    if (simulate->parsed()) return cmd_simulate(cfg, out, secrets);
    if (attack->parsed()) {
      if (transcript.empty()) throw ValidationError("attack needs a transcript path");
      return cmd_attack(method, transcript, report);
    }
    if (check->parsed()) return cmd_check(report, secrets);
    if (bench->parsed()) return cmd_bench(cfg, trials, method);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
