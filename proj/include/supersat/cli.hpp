#ifndef SUPERSAT_CLI_HPP
#define SUPERSAT_CLI_HPP

// Command-line front end. `run` never writes to the process streams; the
// caller prints CommandResult::output() to stdout and diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "supersat/core.hpp"
#include "supersat/counting.hpp"
#include "supersat/oracle.hpp"
#include "supersat/scd.hpp"
#include "supersat/theorem.hpp"
#include "supersat/verify.hpp"

namespace supersat::cli {

using Json = nlohmann::ordered_json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;          // unknown command, bad flags
inline constexpr int io = 3;             // unreadable or unwritable file
inline constexpr int format = 4;         // malformed family file
inline constexpr int precondition = 5;   // parameter outside an operation's domain
inline constexpr int overflow = 6;
inline constexpr int check_failed = 7;   // a validation, suite or report reported failure
inline constexpr int internal = 8;
} // namespace exit_code

struct CommandResult {
  enum class Status { Ok, Error };

  Status status = Status::Ok;
  Json payload = Json::object();
  std::string text;          // non-JSON output (family files, dumps, tables)
  std::string diagnostics;
  int exit_code = exit_code::ok;

  std::string output() const {
    if (!text.empty()) return text;
    if (payload.empty()) return {};
    return payload.dump() + "\n";
  }
};

/// Integers above 2^53 are emitted as decimal strings.
inline Json exact_json(const BigInt& v) {
  if (v >= 0 && v <= (BigInt(1) << 53)) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= -(BigInt(1) << 53)) return v.convert_to<std::int64_t>();
  return v.str();
}

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Io: return exit_code::io;
    case Errc::MalformedLine:
    case Errc::ElementOutOfRange:
    case Errc::DuplicateSubset:
    case Errc::MissingHeader: return exit_code::format;
    case Errc::Overflow: return exit_code::overflow;
    default: return exit_code::precondition;
  }
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    if (!supersat::detail::parse_int(supersat::detail::trim(item), v))
      throw CLI::ValidationError(flag, "expected comma-separated integers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::Io, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::Io, "cannot write '" + path + "'");
  out << content;
  require(static_cast<bool>(out), Errc::Io, "write to '" + path + "' failed");
}

inline Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"passed", r.ok()}, {"checks", checks}};
}

inline Json oracle_json(const OracleResult& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"size", r.m},
          {"min_count", exact_json(r.min_count)},
          {"exact", r.exact},
          {"witness", serialize_family(r.witness)}};
}

} // namespace detail

struct Options {
  int n = 0;
  int k = 0;
  std::uint64_t x = 0;
  std::uint64_t size = 0;
  std::uint64_t seed = 1;
  std::uint64_t iters = 10000;
  std::string family_path;
  std::string out_path;
  std::string method = "inductive";
  std::string permute;
  std::string levels;
  std::string suite;
  bool validate = false;
  bool enumerate = false;
  bool heuristic = false;
  bool achieved = false;
  bool json = false;
};

inline CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;
  CLI::App app{"Chain supersaturation toolkit for the Boolean lattice", "supersat"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "Lower bound on k-chains for |F| = Sigma(n,k-1) + x");
  bound->add_option("--n", o.n)->required();
  bound->add_option("--k", o.k)->required();
  bound->add_option("--x", o.x)->required();
  bound->add_flag("--achieved", o.achieved, "also count chains in the extremal family");

  auto* sig = app.add_subcommand("sigma", "Size of the k middle levels");
  sig->add_option("--n", o.n)->required();
  sig->add_option("--k", o.k)->required();

  auto* count = app.add_subcommand("count", "Count k-chains in a family file");
  count->add_option("--k", o.k)->required();
  count->add_option("--family", o.family_path)->required();

  auto* construct = app.add_subcommand("construct", "Emit the extremal family B(n,k-1) + x sets");
  construct->add_option("--n", o.n)->required();
  construct->add_option("--k", o.k)->required();
  construct->add_option("--x", o.x)->required();
  construct->add_option("--out", o.out_path);

  auto* scd = app.add_subcommand("scd", "Dump or validate a symmetric chain decomposition");
  scd->add_option("--n", o.n)->required();
  scd->add_option("--method", o.method)->check(CLI::IsMember({"inductive", "bracketing"}));
  scd->add_option("--permute", o.permute, "comma-separated images of 1..n");
  scd->add_flag("--validate", o.validate);

  auto* nperm = app.add_subcommand("nperm", "Permutations placing a chain with given levels on one SCD chain");
  nperm->add_option("--n", o.n)->required();
  nperm->add_option("--levels", o.levels)->required();
  nperm->add_flag("--enumerate", o.enumerate, "brute-force cross-check (n <= 7)");

  auto* oracle = app.add_subcommand("oracle", "Minimum k-chain count over families of a given size");
  oracle->add_option("--n", o.n)->required();
  oracle->add_option("--k", o.k)->required();
  oracle->add_option("--size", o.size)->required();
  oracle->add_flag("--heuristic", o.heuristic);
  oracle->add_option("--seed", o.seed);
  oracle->add_option("--iters", o.iters);

  auto* kleitman = app.add_subcommand("kleitman", "Compare minimum chain counts with the centered construction");
  kleitman->add_option("--n", o.n)->required();
  kleitman->add_option("--k", o.k)->required();
  kleitman->add_option("--seed", o.seed);
  kleitman->add_option("--iters", o.iters);
  kleitman->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"theorem", "scd", "counting"}));

  auto fail = [&](int code, const std::string& message) {
    result.status = CommandResult::Status::Error;
    result.exit_code = code;
    result.diagnostics = message;
    result.payload = Json::object();
    result.text.clear();
    return result;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.text = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.text = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    return fail(exit_code::usage, e.what());
  }

  try {
    if (bound->parsed()) {
      const BoundReport r = make_bound_report(o.n, o.k, o.x);
      Json j{{"n", r.n}, {"k", r.k}, {"x", exact_json(r.x)}, {"sigma", exact_json(r.sigma_threshold)},
             {"bound", exact_json(r.bound_value)}, {"tight_x_max", exact_json(r.tight_x_max)}};
      if (o.achieved) {
        const Family f = build_extremal_family(o.n, o.k, o.x);
        j["achieved"] = exact_json(count_k_chains(f, o.k).value);
      }
      result.payload = std::move(j);
    } else if (sig->parsed()) {
      result.payload = {{"n", o.n}, {"k", o.k}, {"sigma", exact_json(sigma(o.n, o.k))}};
    } else if (count->parsed()) {
      const Family f = parse_family(detail::read_file(o.family_path));
      const ChainCount c = count_k_chains(f, o.k);
      result.payload = {{"count", exact_json(c.value)}, {"n", c.n}, {"k", c.k}};
    } else if (construct->parsed()) {
      const Family f = build_extremal_family(o.n, o.k, o.x);
      const std::string body = serialize_family(f);
      if (o.out_path.empty()) {
        result.text = body;
      } else {
        detail::write_file(o.out_path, body);
        result.payload = {{"n", o.n}, {"k", o.k}, {"x", o.x}, {"size", f.size()}, {"out", o.out_path}};
      }
    } else if (scd->parsed()) {
      Decomposition d = o.method == "bracketing" ? scd_bracketing(o.n) : scd_inductive(o.n);
      if (!o.permute.empty()) d = permute_decomposition(d, Permutation(detail::parse_int_list(o.permute, "--permute")));
      if (o.validate) {
        const ScdReport report = validate_scd(d);
        Json checks = Json::object();
        Json failures = Json::array();
        for (const auto& c : report.checks) {
          checks[c.name] = c.passed;
          if (!c.passed) failures.push_back(c.name + ": " + c.detail);
        }
        result.payload = {{"n", o.n},           {"method", o.method}, {"chains", d.chains().size()},
                          {"passed", report.ok()}, {"checks", checks},   {"failures", failures}};
        if (!report.ok()) {
          result.status = CommandResult::Status::Error;
          result.exit_code = exit_code::check_failed;
          result.diagnostics = "decomposition failed validation";
        }
      } else {
        result.text = dump_decomposition(d);
      }
    } else if (nperm->parsed()) {
      const LevelTuple t(o.n, detail::parse_int_list(o.levels, "--levels"));
      Json j{{"n", t.n()}, {"levels", t.levels()}, {"factorial", exact_json(n_permutations_factorial(t))}};
      bool agree = true;
      if (t.k() >= 2) {
        const YZ v = yz(t);
        const BigInt ratio = n_permutations_ratio(t);
        j["ratio"] = exact_json(ratio);
        j["y"] = exact_json(v.y);
        j["z"] = exact_json(v.z);
        agree = ratio == n_permutations_factorial(t);
      }
      if (o.enumerate) {
        Chain chain;
        for (int a : t.levels()) chain.sets.push_back(static_cast<Word>((std::uint64_t{1} << a) - 1));
        const BigInt by_inductive = n_permutations_enumerate(scd_inductive(o.n), chain);
        const BigInt by_bracketing = n_permutations_enumerate(scd_bracketing(o.n), chain);
        j["enumerated"] = {{"inductive", exact_json(by_inductive)}, {"bracketing", exact_json(by_bracketing)}};
        agree = agree && by_inductive == n_permutations_factorial(t) && by_bracketing == by_inductive;
      }
      j["agree"] = agree;
      result.payload = std::move(j);
      if (!agree) {
        result.status = CommandResult::Status::Error;
        result.exit_code = exit_code::check_failed;
        result.diagnostics = "closed forms and enumeration disagree";
      }
    } else if (oracle->parsed()) {
      const OracleResult r = o.heuristic ? min_chain_count_heuristic(o.n, o.k, o.size, o.seed, o.iters)
                                         : min_chain_count_exact(o.n, o.k, o.size);
      result.payload = detail::oracle_json(r);
    } else if (kleitman->parsed()) {
      const KleitmanReport r = kleitman_report(o.n, o.k, o.seed, o.iters);
      if (o.json) {
        Json rows = Json::array();
        for (const auto& row : r.rows)
          rows.push_back({{"m", row.m},
                          {"min", exact_json(row.min_count)},
                          {"exact", row.exact},
                          {"construction", exact_json(row.construction_count)},
                          {"equal", row.equal},
                          {"bound", exact_json(row.bound)},
                          {"asserted", row.asserted},
                          {"ok", row.ok}});
        result.payload = {{"n", r.n}, {"k", r.k}, {"passed", r.ok()}, {"rows", rows}};
      } else {
        result.text = kleitman_tsv(r);
      }
      if (!r.ok()) {
        result.status = CommandResult::Status::Error;
        result.exit_code = exit_code::check_failed;
        result.diagnostics = "an asserted row disagrees with the construction or the bound";
      }
    } else if (verify->parsed()) {
      const SuiteReport r = run_suite(o.suite);
      result.payload = detail::suite_json(r);
      if (!r.ok()) {
        result.status = CommandResult::Status::Error;
        result.exit_code = exit_code::check_failed;
        result.diagnostics = "suite '" + o.suite + "' failed";
      }
    }
  } catch (const Error& e) {
    return fail(exit_code_for(e.code()), e.what());
  } catch (const CLI::ParseError& e) {
    return fail(exit_code::usage, e.what());
  } catch (const std::exception& e) {
    return fail(exit_code::internal, e.what());
  }
  return result;
}

} // namespace supersat::cli

#endif // SUPERSAT_CLI_HPP
