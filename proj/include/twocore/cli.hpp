#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "counting.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "serialize.hpp"
#include "tower.hpp"

namespace twocore::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

enum class Format { text, json };

namespace detail {

inline std::uint64_t parse_count_arg(const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("not a non-negative decimal integer: '" + text + "'");
  return value;
}

inline nlohmann::json envelope(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

inline void add_format(CLI::App* sub, Format& format) {
  sub->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}))
      ->default_str("text");
}

}  // namespace detail

// Entry point shared by the twocore binary and the tests. `args` excludes the
// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-core towers, SYT dimensions and dimension counts mod 4", "twocore"};
  app.require_subcommand(1);

  Format format = Format::text;
  std::string partition_text;

  auto* dim = app.add_subcommand("dim", "Dimension f, its 2-adic valuation and f mod 4");
  auto* core = app.add_subcommand("core", "2-core");
  auto* quotient = app.add_subcommand("quotient", "2-quotient (lambda^(0), lambda^(1))");
  auto* tower = app.add_subcommand("tower", "2-core tower and its row weights");
  for (auto* sub : {dim, core, quotient, tower}) {
    sub->add_option("partition", partition_text, "Comma-separated parts, '-' for the empty partition")->required();
    detail::add_format(sub, format);
  }

  std::string selector;
  std::string n_text;
  auto* count = app.add_subcommand("count", "a | a2 | m4 | p | div4 for a given n");
  count->add_option("selector", selector)->required()->check(CLI::IsMember({"a", "a2", "m4", "p", "div4"}));
  count->add_option("n", n_text)->required();
  detail::add_format(count, format);

  int census_n = 0;
  auto* census = app.add_subcommand("census", "Brute-force tally of f mod 4 over all partitions of n");
  census->add_option("n", census_n)->required()->check(CLI::NonNegativeNumber);
  detail::add_format(census, format);

  int max_n = oracle::kDefaultVerifyMax;
  int workers = 0;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Check every formula against brute force for n <= max-n");
  verify->add_option("--max-n", max_n, "Largest n to sweep")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", timings, "Append per-check wall time");
  detail::add_format(verify, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool json = format == Format::json;
  try {
    if (*dim || *core || *quotient || *tower) {
      const Partition lambda = parse_partition(partition_text);
      const std::string name = to_string(lambda);
      if (*dim) {
        const BigNat f = dimension(lambda);
        const int v2 = v2_dimension(lambda);
        const int mod4 = dimension_mod4(lambda);
        if (json) {
          auto doc = detail::envelope("dim");
          doc.update({{"partition", name}, {"dimension", to_decimal(f)}, {"v2", v2}, {"mod4", mod4}});
          out << doc.dump() << '\n';
        } else {
          out << "partition " << name << "\ndimension " << f << "\nv2 " << v2 << "\nmod4 " << mod4 << '\n';
        }
      } else if (*core) {
        const Partition c = two_core(lambda);
        if (json) {
          auto doc = detail::envelope("core");
          doc.update({{"partition", name}, {"core", to_string(c)}});
          out << doc.dump() << '\n';
        } else {
          out << to_string(c) << '\n';
        }
      } else if (*quotient) {
        const TwoQuotient q = two_quotient(lambda);
        if (json) {
          auto doc = detail::envelope("quotient");
          doc.update({{"partition", name}, {"q0", to_string(q.zero)}, {"q1", to_string(q.one)}});
          out << doc.dump() << '\n';
        } else {
          out << "q0 " << to_string(q.zero) << "\nq1 " << to_string(q.one) << '\n';
        }
      } else {
        const CoreTower t = build_tower(lambda);
        if (json) {
          auto doc = detail::envelope("tower");
          doc.update(tower_json(t));
          out << doc.dump() << '\n';
        } else {
          const auto w = t.row_weights();
          out << render_ascii(t) << "row_weights";
          for (int x : w) out << ' ' << x;
          out << '\n';
        }
      }
      return kOk;
    }

    if (*count) {
      const std::uint64_t n = detail::parse_count_arg(n_text);
      BigNat value;
      if (selector == "a") value = count_odd(n);
      else if (selector == "a2") value = a2(n);
      else if (selector == "m4") value = m4(n);
      else if (selector == "p") value = partition_count(n);
      else value = count_div4(n);
      if (json) {
        auto doc = detail::envelope("count");
        doc.update({{"selector", selector}, {"n", std::to_string(n)}, {"value", to_decimal(value)}});
        out << doc.dump() << '\n';
      } else {
        out << value << '\n';
      }
      return kOk;
    }

    if (*census) {
      const auto c = oracle::census_mod4(census_n, 0);
      if (json) {
        auto doc = detail::envelope("census");
        doc.update(census_json(c));
        out << doc.dump() << '\n';
      } else {
        for (std::size_t r = 0; r < 4; ++r) out << (r ? " " : "") << 'a' << r << '=' << c.counts[r];
        out << '\n';
      }
      return kOk;
    }

    oracle::VerifyOptions options;
    options.n_max = max_n;
    options.workers = workers;
    const auto report = oracle::verify_all(options);
    if (json) {
      auto doc = detail::envelope("verify");
      doc.update(report_json(report, timings));
      out << doc.dump() << '\n';
    } else {
      out << oracle::to_text(report, timings);
    }
    return report.all_passed() ? kOk : kVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace twocore::cli
