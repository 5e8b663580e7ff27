#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "characterization.hpp"
#include "errors.hpp"
#include "natural.hpp"
#include "prime_power_theorem.hpp"
#include "scan.hpp"

namespace primechar::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kTheoremViolation = 3,
};

/// Parses "a..b" or a single numeral "a".
inline std::pair<Natural, Natural> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    Natural v = Natural::from_decimal(text);
    return {v, v};
  }
  return {Natural::from_decimal(text.substr(0, dots)), Natural::from_decimal(text.substr(dots + 2))};
}

namespace detail {

inline OutputFormat parse_format(const std::string& s) {
  return s == "csv" ? OutputFormat::kCsv : OutputFormat::kJsonl;
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial-coefficient prime characterization: checks, witnesses and scans",
               "primechar"};
  app.require_subcommand(1);

  std::string n_text;
  std::string p_text;
  std::uint64_t k = 1;
  std::string format = "jsonl";
  auto* check = app.add_subcommand("check", "Compare C(n, p^k) with floor(n / p^k) modulo p");
  check->add_option("--n", n_text, "n (decimal)")->required();
  check->add_option("--p", p_text, "p (decimal)")->required();
  check->add_option("--k", k, "exponent k; k != 1 needs a prime p");
  check->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}));

  auto* prime_test = app.add_subcommand("prime-test", "Decide primality via the congruence");
  prime_test->add_option("p", p_text, "p >= 2 (decimal)")->required();

  auto* witness = app.add_subcommand("witness", "Composite witness at n = p + q");
  witness->add_option("p", p_text, "composite p (decimal)")->required();

  std::string mode;
  std::string p_range;
  std::string n_max_text;
  std::uint64_t k_max = 0;
  std::uint64_t s_max = 3;
  unsigned jobs = 0;
  auto* scan = app.add_subcommand("scan", "Bulk verification records");
  scan->add_option("--mode", mode)->required()->check(
      CLI::IsMember({"theorem1", "theorem31", "lemma32"}));
  scan->add_option("--p", p_range, "p range a..b")->required();
  scan->add_option("--n-max", n_max_text, "largest n (x for lemma32)")->required();
  auto* k_max_opt = scan->add_option("--k-max", k_max, "largest k");
  scan->add_option("--s-max", s_max, "largest s (lemma32)");
  scan->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    if (*check) {
      const Natural n = Natural::from_decimal(n_text);
      const Natural p = Natural::from_decimal(p_text);
      ScanRecord rec = k == 1
          ? to_record(ScanMode::kTheorem1, 1, congruence_check(n, p), false)
          : to_record(ScanMode::kTheorem31, k, prime_power_congruence_check(n, p, k), false);
      write_records(out, {rec}, rec.mode, detail::parse_format(format));
      return rec.holds ? kOk : kNegative;
    }

    if (*prime_test) {
      const Natural p = Natural::from_decimal(p_text);
      const PrimalityVerdict v = is_prime_by_characterization(p);
      nlohmann::ordered_json j;
      j["p"] = p.to_string();
      j["verdict"] = v.is_prime ? "prime" : "composite";
      if (v.failing) {
        j["n"] = v.failing->n.to_string();
        j["binom_mod"] = v.failing->binom_residue.value().to_string();
        j["floor_mod"] = v.failing->floor_residue.value().to_string();
        j["modulus"] = v.failing->binom_residue.modulus().to_string();
        j["holds"] = false;
      }
      out << j.dump() << '\n';
      return v.is_prime ? kOk : kNegative;
    }

    if (*witness) {
      const Natural p = Natural::from_decimal(p_text);
      const CompositeWitness w = witness_for_composite(p);
      nlohmann::ordered_json j;
      j["p"] = w.p.to_string();
      j["q"] = w.q.to_string();
      j["x"] = std::to_string(w.x);
      j["cofactor"] = w.cofactor.to_string();
      j["n"] = w.n.to_string();
      j["binom_mod"] = w.binom_residue_qx.value().to_string();
      j["floor_mod"] = w.floor_residue_qx.value().to_string();
      j["modulus"] = w.binom_residue_qx.modulus().to_string();
      j["predicted"] = w.predicted_residue.to_string();
      j["holds"] = false;
      out << j.dump() << '\n';
      return kOk;
    }

    if (*scan) {
      ScanOptions opt;
      opt.mode = mode == "theorem1" ? ScanMode::kTheorem1
               : mode == "theorem31" ? ScanMode::kTheorem31
                                     : ScanMode::kLemma32;
      std::tie(opt.p_min, opt.p_max) = parse_range(p_range);
      opt.n_max = Natural::from_decimal(n_max_text);
      if (*k_max_opt) opt.k_max = k_max;
      opt.s_max = s_max;
      opt.jobs = jobs;
      const auto records = run_scan(opt);
      write_records(out, records, opt.mode, detail::parse_format(format));

      std::size_t holds = 0;
      std::size_t unexpected = 0;
      for (const auto& r : records) {
        holds += r.holds ? 1 : 0;
        unexpected += is_unexpected_failure(r) ? 1 : 0;
      }
      err << "summary: mode=" << mode << " records=" << records.size() << " holds=" << holds
          << " fails=" << records.size() - holds << " unexpected_failures=" << unexpected << '\n';
      return unexpected == 0 ? kOk : kNegative;
    }
  } catch (const NotComposite& e) {
    err << "not composite: " << e.what() << '\n';
    return kNegative;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kTheoremViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace primechar::cli
