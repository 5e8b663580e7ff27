#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "characterization.hpp"
#include "core_arith.hpp"
#include "natural.hpp"
#include "prime_power_theorem.hpp"

namespace primechar {

enum class ScanMode { kTheorem1, kTheorem31, kLemma32 };
enum class OutputFormat { kJsonl, kCsv };

inline std::string_view to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::kTheorem1: return "theorem1";
    case ScanMode::kTheorem31: return "theorem31";
    case ScanMode::kLemma32: return "lemma32";
  }
  return "";
}

/// One probe. Field order on output: mode, p, k, n (or x, s), binom_mod,
/// floor_mod, modulus, holds, then hypothesis for lemma32.
///
/// For lemma32, binom_mod is r = x mod p^k, floor_mod is r' = x mod p^(ks),
/// modulus is p^(ks) and holds is the implication hypothesis => (r == r').
struct ScanRecord {
  ScanMode mode = ScanMode::kTheorem1;
  Natural p;
  std::uint64_t k = 1;
  Natural n;  // x in lemma32
  std::uint64_t s = 0;
  Natural binom_mod;
  Natural floor_mod;
  Natural modulus;
  bool holds = false;
  bool hypothesis = false;
  bool failure_expected = false;  // composite p in theorem1
};

inline ScanRecord to_record(ScanMode mode, std::uint64_t k, const CongruenceReport& r,
                            bool failure_expected) {
  ScanRecord rec;
  rec.mode = mode;
  rec.p = r.p;
  rec.k = k;
  rec.n = r.n;
  rec.binom_mod = r.binom_residue.value();
  rec.floor_mod = r.floor_residue.value();
  rec.modulus = r.binom_residue.modulus();
  rec.holds = r.holds;
  rec.failure_expected = failure_expected;
  return rec;
}

inline ScanRecord to_record(const FloorPowerReport& r) {
  ScanRecord rec;
  rec.mode = ScanMode::kLemma32;
  rec.p = r.p;
  rec.k = r.k;
  rec.n = r.x;
  rec.s = r.s;
  rec.binom_mod = r.r;
  rec.floor_mod = r.r_prime;
  rec.modulus = r.modulus;
  rec.hypothesis = r.hypothesis_holds;
  rec.holds = !r.hypothesis_holds || r.conclusion_holds;
  return rec;
}

inline bool is_unexpected_failure(const ScanRecord& rec) {
  return !rec.holds && !rec.failure_expected;
}

struct ScanOptions {
  ScanMode mode = ScanMode::kTheorem1;
  Natural p_min = 2;
  Natural p_max = 2;
  Natural n_max = 0;
  std::optional<std::uint64_t> k_max;  // theorem31: default all k with p^k <= n_max; lemma32: 2
  std::uint64_t s_max = 3;             // lemma32 only
  unsigned jobs = 0;                   // 0: hardware concurrency
};

namespace detail {

inline std::vector<ScanRecord> scan_one_prime(const ScanOptions& opt, const Natural& p) {
  std::vector<ScanRecord> out;
  switch (opt.mode) {
    case ScanMode::kTheorem1: {
      const bool composite = !is_prime(p);
      for (const auto& r : congruence_scan(p, opt.n_max)) {
        out.push_back(to_record(opt.mode, 1, r, composite));
      }
      break;
    }
    case ScanMode::kTheorem31: {
      if (!is_prime(p)) break;
      for (std::uint64_t k = 1;; ++k) {
        if (opt.k_max ? k > *opt.k_max : (k > 1 && pow(p, k) > opt.n_max)) break;
        for (const auto& r : prime_power_congruence_scan(p, k, opt.n_max)) {
          out.push_back(to_record(opt.mode, k, r, false));
        }
      }
      break;
    }
    case ScanMode::kLemma32: {
      if (!is_prime(p)) break;
      const std::uint64_t k_max = opt.k_max.value_or(2);
      for (Natural x = 1; x <= opt.n_max; ++x) {
        for (std::uint64_t k = 0; k <= k_max; ++k) {
          for (std::uint64_t s = 1; s <= opt.s_max; ++s) {
            out.push_back(to_record(check_floor_power_lemma(x, p, k, s)));
          }
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Runs a scan over p in [p_min, p_max]. Each p is computed independently
/// (possibly concurrently); records come back ordered by p, then n or x.
inline std::vector<ScanRecord> run_scan(const ScanOptions& opt) {
  if (opt.p_min > opt.p_max) throw InvalidArgument("scan needs p_min <= p_max");
  if (opt.p_min < Natural(2)) throw InvalidArgument("scan needs p_min >= 2");

  std::vector<Natural> ps;
  for (Natural p = opt.p_min; p <= opt.p_max; ++p) ps.push_back(p);

  const unsigned workers =
      std::max(1u, opt.jobs != 0 ? opt.jobs : std::thread::hardware_concurrency());
  std::vector<std::vector<ScanRecord>> per_p(ps.size());
  for (std::size_t start = 0; start < ps.size(); start += workers) {
    const std::size_t stop = std::min(ps.size(), start + workers);
    std::vector<std::future<std::vector<ScanRecord>>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, detail::scan_one_prime, std::cref(opt),
                                 std::cref(ps[i])));
    }
    for (std::size_t i = start; i < stop; ++i) per_p[i] = batch[i - start].get();
  }

  std::vector<ScanRecord> out;
  for (auto& chunk : per_p) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;
}

// ---- serialization ----

inline std::vector<std::string> record_fields(ScanMode mode) {
  if (mode == ScanMode::kLemma32) {
    return {"mode", "p", "k", "x", "s", "binom_mod", "floor_mod", "modulus", "holds", "hypothesis"};
  }
  return {"mode", "p", "k", "n", "binom_mod", "floor_mod", "modulus", "holds"};
}

/// Field values in record_fields order, numbers as decimal strings.
inline std::vector<std::string> record_values(const ScanRecord& rec) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::vector<std::string> v{std::string(to_string(rec.mode)), rec.p.to_string(),
                             std::to_string(rec.k), rec.n.to_string()};
  if (rec.mode == ScanMode::kLemma32) v.push_back(std::to_string(rec.s));
  v.push_back(rec.binom_mod.to_string());
  v.push_back(rec.floor_mod.to_string());
  v.push_back(rec.modulus.to_string());
  v.push_back(b(rec.holds));
  if (rec.mode == ScanMode::kLemma32) v.push_back(b(rec.hypothesis));
  return v;
}

inline std::string to_jsonl(const ScanRecord& rec) {
  const auto names = record_fields(rec.mode);
  const auto values = record_values(rec);
  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const bool boolean = names[i] == "holds" || names[i] == "hypothesis";
    if (boolean) {
      j[names[i]] = values[i] == "true";
    } else {
      j[names[i]] = values[i];
    }
  }
  return j.dump();
}

inline std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) line += ',';
    line += csv_quote(fields[i]);
  }
  return line;
}

/// Writes records (no summary). CSV gets a header row for the mode.
inline void write_records(std::ostream& os, const std::vector<ScanRecord>& records,
                          ScanMode mode, OutputFormat format) {
  if (format == OutputFormat::kCsv) os << csv_row(record_fields(mode)) << '\n';
  for (const auto& rec : records) {
    os << (format == OutputFormat::kJsonl ? to_jsonl(rec) : csv_row(record_values(rec))) << '\n';
  }
}

}  // namespace primechar
