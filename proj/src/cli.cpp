#include "digigap/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "digigap/curves.hpp"
#include "digigap/errors.hpp"
#include "digigap/gaps.hpp"
#include "digigap/object.hpp"
#include "digigap/verify.hpp"
#include "digigap/voxel_io.hpp"

namespace digigap::cli {
namespace {

using nlohmann::json;

DigitalObject load(const std::string& path, const Options& opts, std::ostream& err) {
  const auto policy = opts.strict ? DuplicatePolicy::kStrict : DuplicatePolicy::kDeduplicate;
  DigitalObject d = read_voxel_file(path, opts.n, policy);
  if (d.duplicates_dropped() > 0) {
    err << "warning: dropped " << d.duplicates_dropped() << " duplicate voxel(s)\n";
  }
  return d;
}

// Runs `body` and maps every operational exception to exit code 2.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse failure at " << e.what() << '\n';
  } catch (const DuplicateVoxel& e) {
    err << "error: " << e.what() << " (strict mode)\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitOperational;
}

json cell_json(const Cell& c) {
  return json{{"doubled", std::vector<Coord>(c.coords().begin(), c.coords().end())},
              {"half", c.half_integer_string()}};
}

std::string curve_word(bool valid) { return valid ? "valid" : "invalid"; }

}  // namespace

int cmd_census(const std::string& path, const Options& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const DigitalObject d = load(path, opts, err);
    const CellCensus cc = census(d);
    const std::size_t n = d.ambient();
    if (opts.format == Format::kJson) {
      json rows = json::array();
      for (std::size_t i = 0; i <= n; ++i) {
        json row{{"i", i}, {"c", cc.c(i)}};
        if (i < n) {
          row["free"] = cc.c_free(i);
          row["nonfree"] = cc.c_nonfree(i);
        }
        rows.push_back(row);
      }
      out << json{{"n", n}, {"voxels", d.size()}, {"census", rows}}.dump(2) << '\n';
      return kExitOk;
    }
    out << "n=" << n << " voxels=" << d.size() << '\n';
    out << "# i: c_i free non-free\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << "i=" << i << ": " << cc.c(i) << ' ' << cc.c_free(i) << ' ' << cc.c_nonfree(i) << '\n';
    }
    out << "i=" << n << ": " << cc.c(n) << '\n';
    return kExitOk;
  });
}

int cmd_gaps(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DigitalObject d = load(path, opts, err);
    const GapReport r = gap_report(d);
    const bool k_curve = validate_curve(d, opts.k).is_valid;

    if (opts.format == Format::kJson) {
      json gaps = json::array();
      for (std::size_t i = 0; i < r.hubs.size(); ++i) {
        json hubs = json::array();
        for (const Cell& h : r.hubs[i]) hubs.push_back(cell_json(h));
        gaps.push_back({{"i", i}, {"g", r.g(i)}, {"hubs", hubs}});
      }
      json doc{{"n", r.ambient_n},
               {"voxels", d.size()},
               {"zero_curve", r.is_zero_curve},
               {"k", opts.k},
               {"k_curve", k_curve},
               {"gaps", gaps}};
      if (r.g1_formula) {
        doc["g1_formula"] = *r.g1_formula;
        doc["g1_agree"] = r.g1_agrees();
      }
      if (r.g0_formula) {
        doc["g0_formula"] = *r.g0_formula;
        doc["g0_agree"] = r.g0_agrees();
        doc["g0_in_hypothesis"] = r.is_zero_curve;
      }
      out << doc.dump(2) << '\n';
      return kExitOk;
    }

    out << "n=" << r.ambient_n << " voxels=" << d.size() << " curve(k=" << opts.k
        << ")=" << curve_word(k_curve) << '\n';
    for (std::size_t i = 0; i < r.hubs.size(); ++i) {
      out << (i ? " " : "") << 'g' << i << '=' << r.g(i);
    }
    if (!r.hubs.empty()) out << '\n';
    for (std::size_t i = 0; i < r.hubs.size(); ++i) {
      out << 'g' << i << '=' << r.g(i);
      for (const Cell& h : r.hubs[i]) {
        out << " hub=" << h.half_integer_string() << " doubled=" << h.doubled_string();
      }
      out << '\n';
    }
    if (r.g1_formula) {
      out << "g1=" << r.g(1) << " formula=" << *r.g1_formula << ' '
          << (r.g1_agrees() ? "agree" : "DISAGREE") << '\n';
    }
    if (r.g0_formula) {
      out << "g0=" << r.g(0) << " formula=" << *r.g0_formula << ' ';
      if (r.is_zero_curve) {
        out << (r.g0_agrees() ? "agree" : "DISAGREE") << '\n';
      } else {
        out << "out-of-hypothesis (not a 0-curve)\n";
      }
    }
    return kExitOk;
  });
}

int cmd_verify(const std::string& path, const Options& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const DigitalObject d = load(path, opts, err);
    const VerdictTable table = run_identity_suite(d);
    const CurveCheck k_check = validate_curve(d, opts.k);
    const int code = table.all_pass() ? kExitOk : kExitClaimFailure;
    const bool out_of_hypothesis = d.ambient() == 3 && !table.curve_valid;

    if (opts.format == Format::kJson) {
      json rows = json::array();
      for (const Verdict& v : table.rows) {
        rows.push_back({{"claim", v.claim},
                        {"input", v.input},
                        {"expected", v.expected},
                        {"observed", v.observed},
                        {"pass", v.pass},
                        {"informational", v.informational}});
      }
      json violations = json::array();
      for (const auto& v : k_check.violations) {
        violations.push_back({{"voxel", v.voxel}, {"reason", std::string(to_string(v.reason))}});
      }
      out << json{{"n", d.ambient()},
                  {"voxels", d.size()},
                  {"zero_curve", table.curve_valid},
                  {"k", opts.k},
                  {"k_curve", k_check.is_valid},
                  {"curve_violations", violations},
                  {"components", k_check.component_count},
                  {"out_of_hypothesis", out_of_hypothesis},
                  {"rows", rows},
                  {"failures", table.failures()},
                  {"pass", table.all_pass()}}
                 .dump(2)
          << '\n';
      return code;
    }

    out << "n=" << d.ambient() << " voxels=" << d.size() << " curve(k=" << opts.k
        << ")=" << curve_word(k_check.is_valid) << " components=" << k_check.component_count
        << '\n';
    for (const auto& v : k_check.violations) {
      out << "violation: " << Cell::voxel(v.voxel).half_integer_string() << ' '
          << to_string(v.reason) << '\n';
    }
    std::size_t width = 0;
    for (const Verdict& v : table.rows) width = std::max(width, v.claim.size());
    for (const Verdict& v : table.rows) {
      const char* tag = v.informational ? "INFO" : (v.pass ? "PASS" : "FAIL");
      out << tag << "  " << std::left << std::setw(static_cast<int>(width)) << v.claim
          << "  expected=" << v.expected << " observed=" << v.observed << "  [" << v.input
          << "]\n";
    }
    if (out_of_hypothesis) {
      out << "note: not a digital 0-curve; curve-specific claims are out of hypothesis\n";
    }
    out << "result: " << (code == kExitOk ? "PASS" : "FAIL") << " (" << table.rows.size()
        << " rows, " << table.failures() << " failures)\n";
    return code;
  });
}

int cmd_gen(long long length, std::uint64_t seed, const std::string& out_path,
            const Options& opts, std::ostream& out, std::ostream& err) {
  if (length < 2) {
    err << "usage error: --length must be at least 2\n";
    return kExitOperational;
  }
  return guarded(err, [&] {
    CurveGenOptions gen;
    gen.k = opts.k;
    gen.ambient_n = opts.n;
    const DigitalObject d = generate_curve(static_cast<std::size_t>(length), seed, gen);
    std::ostringstream header;
    header << "digital " << opts.k << "-curve n=" << opts.n << " length=" << length
           << " seed=" << seed;
    if (out_path.empty()) {
      write_voxel_text(out, d, header.str());
      return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    write_voxel_text(file, d, header.str());
    if (!file) throw std::runtime_error("write failed for " + out_path);
    return kExitOk;
  });
}

int cmd_constants(int n, const Options& opts, std::ostream& out, std::ostream& err) {
  if (n < 2 || n > 5) {
    err << "usage error: --n must be in [2, 5]\n";
    return kExitOperational;
  }
  bool all_agree = true;
  json rows = json::array();
  std::ostringstream text;
  text << "n=" << n << '\n' << "# (i,j): c_{i->j} | c_{i<-j}  enumerated  status\n";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto to = const_i_to_j(i, j, n);
      const auto from = const_i_from_j(i, j, n);
      const auto to_enum = enumerate_i_to_j(i, j, n);
      const auto from_enum = enumerate_i_from_j(i, j, n);
      const bool agree = to == to_enum && from == from_enum;
      all_agree = all_agree && agree;
      text << '(' << i << ',' << j << "): " << to << " | " << from << "  enumerated " << to_enum
           << " | " << from_enum << "  " << (agree ? "agree" : "DISAGREE") << '\n';
      rows.push_back({{"i", i},
                      {"j", j},
                      {"to", to},
                      {"from", from},
                      {"to_enumerated", to_enum},
                      {"from_enumerated", from_enum},
                      {"agree", agree}});
    }
  }
  if (opts.format == Format::kJson) {
    out << json{{"n", n}, {"rows", rows}, {"pass", all_agree}}.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return all_agree ? kExitOk : kExitClaimFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Grid cell model analysis of digital objects: cell census, gaps, identities.");
  app.require_subcommand(1);

  Options opts;
  std::string format = "text";
  std::string path;
  std::string out_path;
  long long length = 0;
  std::uint64_t seed = 0;
  int n = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--strict", opts.strict, "Reject duplicate voxels instead of dropping them");
    sub->add_option("--k", opts.k, "Adjacency index for curve checks");
    sub->add_option("--n", n, "Ambient dimension of text voxel files");
  };
  auto add_path = [&](CLI::App* sub) {
    sub->add_option("path", path, "Voxel file (.json for structured input)")->required();
  };

  auto* census_cmd = app.add_subcommand("census", "Per-dimension cell counts c_i, c_i*, c_i'");
  auto* gaps_cmd = app.add_subcommand("gaps", "Brute-force hubs and closed-form gap counts");
  auto* verify_cmd = app.add_subcommand("verify", "Check every counting identity on an object");
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random digital curve");
  auto* const_cmd = app.add_subcommand("constants", "Closed-form vs enumerated c_{i->j}, c_{i<-j}");
  for (auto* sub : {census_cmd, gaps_cmd, verify_cmd}) {
    add_common(sub);
    add_path(sub);
  }
  add_common(gen_cmd);
  gen_cmd->add_option("--length", length, "Number of voxels")->required();
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");
  const_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  const_cmd->add_option("--n", n, "Ambient dimension (2..5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitOperational;
  }
  opts.format = format == "json" ? Format::kJson : Format::kText;
  if (n < 1) {
    err << "usage error: --n must be positive\n";
    return kExitOperational;
  }
  opts.n = static_cast<std::size_t>(n);
  if (opts.k < 0 || opts.k >= n) {
    err << "usage error: --k must satisfy 0 <= k < n\n";
    return kExitOperational;
  }

  if (*census_cmd) return cmd_census(path, opts, out, err);
  if (*gaps_cmd) return cmd_gaps(path, opts, out, err);
  if (*verify_cmd) return cmd_verify(path, opts, out, err);
  if (*gen_cmd) return cmd_gen(length, seed, out_path, opts, out, err);
  return cmd_constants(n, opts, out, err);
}

}  // namespace digigap::cli
