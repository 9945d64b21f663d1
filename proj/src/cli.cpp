#include "fatpoints/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fatpoints/oracle.hpp"

namespace fatpoints {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string out_path;
  int points = 0;
  Int mult = 0;
  Int degree = 0;
  Int max_degree = -1;
  Int max_mult = 0;
  bool conjectural = false;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 3;
  std::string policy = "all";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json counts_json(const std::map<Int, Int>& counts) {
  Json out = Json::array();
  for (const auto& [degree, count] : counts) out.push_back({{"degree", degree}, {"count", count}});
  return out;
}

Json class_json(const DivisorClass& c) {
  Json mults = Json::array();
  for (const Int m : c.mults()) mults.push_back(m);
  return {{"degree", c.degree()}, {"mults", mults}};
}

Json query_json(std::string_view command, const Options& opt, bool conjectural) {
  return {{"command", command},
          {"points", opt.points},
          {"mult", opt.mult},
          {"mode", conjectural ? "conjectural" : "proven"}};
}

Json provenance_json(bool conjectural) {
  return {{"engine", "fatpoints"}, {"version", kEngineVersion}, {"conjectural", conjectural}};
}

bool use_conjectural(const Options& opt) {
  if (opt.points <= 9) return false;
  // Refuses with a message naming r > 9 unless the flag was given.
  if (!opt.conjectural) conjectural_profile(opt.points, opt.mult, Mode::Proven);
  return true;
}

struct ProfileAndHf {
  GeneratorProfile profile;
  BettiResolution resolution;
  bool conjectural = false;
};

ProfileAndHf compute(const Options& opt, bool want_resolution) {
  if (use_conjectural(opt)) {
    auto result = conjectural_profile(opt.points, opt.mult, Mode::Conjectural);
    return {std::move(result.profile), std::move(result.resolution), true};
  }
  ProfileAndHf out{generator_profile(opt.points, opt.mult), {}, false};
  if (want_resolution) out.resolution = resolution(opt.points, opt.mult);
  return out;
}

Int hf_of(const Options& opt, bool conjectural, Int d) {
  return hilbert_function(opt.points, opt.mult, d, conjectural ? Mode::Conjectural : Mode::Proven);
}

Json maps_json(const Options& opt, const ProfileAndHf& data) {
  Json maps = Json::array();
  const auto& profile = data.profile;
  for (Int d = std::max<Int>(0, profile.alpha - 1); d <= profile.tau + 1; ++d) {
    MultiplicationMapReport report;
    if (data.conjectural) {
      report.degree = d;
      report.cokernel = profile.generators_in_degree(d + 1);
      report.kernel = report.cokernel - (hf_of(opt, true, d + 1) - 3 * hf_of(opt, true, d));
      report.maximal_rank = report.cokernel == 0 || report.kernel == 0;
    } else {
      report = mu_report(opt.points, opt.mult, d);
    }
    maps.push_back({{"degree", report.degree},
                    {"cokernel", report.cokernel},
                    {"kernel", report.kernel},
                    {"maximal_rank", report.maximal_rank}});
  }
  return maps;
}

Json profile_summary(const GeneratorProfile& p) {
  return {{"alpha", p.alpha}, {"tau", p.tau}, {"omega", p.omega}};
}

Json cmd_hilbert(const Options& opt) {
  const auto data = compute(opt, false);
  const Int last = opt.max_degree >= 0 ? opt.max_degree : data.profile.tau + 3;
  require_input_magnitude(last, "max-degree");
  Json table = Json::array();
  for (Int d = 0; d <= last; ++d) table.push_back({{"degree", d}, {"dimension", hf_of(opt, data.conjectural, d)}});
  Json query = query_json("hilbert", opt, data.conjectural);
  query["max_degree"] = last;
  Json results = profile_summary(data.profile);
  results["hilbert"] = std::move(table);
  return {{"query", query}, {"results", results}, {"provenance", provenance_json(data.conjectural)}};
}

Json cmd_gens(const Options& opt) {
  const auto data = compute(opt, false);
  Json results = profile_summary(data.profile);
  results["total"] = data.profile.total_generators();
  results["generators"] = counts_json(data.profile.nu);
  results["multiplication_maps"] = maps_json(opt, data);
  return {{"query", query_json("gens", opt, data.conjectural)},
          {"results", results},
          {"provenance", provenance_json(data.conjectural)}};
}

Json cmd_resolution(const Options& opt) {
  const auto data = compute(opt, true);
  Json results = profile_summary(data.profile);
  results["generators"] = counts_json(data.resolution.generators);
  results["syzygies"] = counts_json(data.resolution.syzygies);
  results["multiplication_maps"] = maps_json(opt, data);
  return {{"query", query_json("resolution", opt, data.conjectural)},
          {"results", results},
          {"provenance", provenance_json(data.conjectural)}};
}

Json cmd_decompose(const Options& opt) {
  const UniformClass f{opt.points, opt.degree, opt.mult};
  const Decomposition parts = decompose(f);
  const CokernelSplit split = cokernel_split(opt.points, opt.mult, opt.degree);
  Json query = query_json("decompose", opt, false);
  query["degree"] = opt.degree;
  Json results = {{"effective", parts.is_effective},
                  {"original", class_json(parts.original)},
                  {"free_part", class_json(parts.free_part)},
                  {"fixed_part", class_json(parts.fixed_part)},
                  {"h0", h0(f)},
                  {"h1", h1(f)},
                  {"cokernel", {{"free_part", split.free_part}, {"fixed_part", split.fixed_part}, {"total", split.total()}}}};
  return {{"query", query}, {"results", results}, {"provenance", provenance_json(false)}};
}

Json cmd_check_gigc(const Options& opt) {
  const GigcVerdict verdict = gigc_holds(opt.points, opt.max_mult);
  Json failure = nullptr;
  if (verdict.first_failure) {
    const auto report = mu_report(opt.points, verdict.first_failure->m, verdict.first_failure->d);
    failure = {{"m", verdict.first_failure->m},
               {"d", verdict.first_failure->d},
               {"cokernel", report.cokernel},
               {"kernel", report.kernel}};
  }
  Json query = {{"command", "check-gigc"}, {"points", opt.points}, {"max_mult", opt.max_mult}, {"mode", "proven"}};
  return {{"query", query},
          {"results", {{"holds", verdict.holds}, {"first_failure", failure}}},
          {"provenance", provenance_json(false)}};
}

Json cmd_oracle_verify(const Options& opt) {
  if (opt.policy != "all" && opt.policy != "any") throw UsageError("--policy must be 'all' or 'any'");
  VerifyOptions options;
  options.prime = opt.prime;
  options.seed = opt.seed;
  options.policy = opt.policy == "all" ? MatchPolicy::All : MatchPolicy::Any;
  const VerifyResult result = verify(opt.points, opt.mult, opt.trials, options);

  Json trials = Json::array();
  for (const auto& trial : result.trials) {
    std::map<Int, Int> dims;
    std::map<Int, Int> gens;
    for (Int d = result.first_degree; d <= result.last_degree; ++d) {
      dims[d] = trial.report.dims.at(d);
      gens[d] = trial.report.nu.at(d);
    }
    Json dims_json = Json::array();
    for (const auto& [d, n] : dims) dims_json.push_back({{"degree", d}, {"dimension", n}});
    trials.push_back({{"seed", trial.seed},
                      {"matched", trial.matched},
                      {"mismatches", trial.mismatches},
                      {"dimensions", dims_json},
                      {"generators", counts_json(gens)}});
  }
  Json query = query_json("oracle-verify", opt, false);
  query["prime"] = opt.prime;
  query["seed"] = opt.seed;
  query["trials"] = opt.trials;
  query["policy"] = opt.policy;
  Json provenance = provenance_json(false);
  provenance["oracle"] = {{"prime", result.prime}, {"seed", opt.seed}};
  return {{"query", query},
          {"results", {{"passed", result.passed}, {"first_degree", result.first_degree},
                       {"last_degree", result.last_degree}, {"trials", trials}}},
          {"provenance", provenance}};
}

// --- text rendering -------------------------------------------------------

std::string scheme_name(const Json& query) {
  std::ostringstream os;
  os << "I(" << query["mult"].get<Int>() << "(p1+...+p" << query["points"].get<int>() << "))";
  return os.str();
}

std::string class_text(const Json& c) {
  std::ostringstream os;
  os << c["degree"].get<Int>() << "e0";
  const auto& mults = c["mults"];
  const bool uniform = std::all_of(mults.begin(), mults.end(), [&](const Json& m) { return m == mults[0]; });
  if (uniform) {
    const Int m = mults[0].get<Int>();
    if (m != 0) os << (m > 0 ? " - " : " + ") << (m > 0 ? m : -m) << "(e1+...+e" << mults.size() << ")";
    return os.str();
  }
  for (std::size_t i = 0; i < mults.size(); ++i) {
    const Int m = mults[i].get<Int>();
    if (m != 0) os << (m > 0 ? " - " : " + ") << (m > 0 ? m : -m) << "e" << (i + 1);
  }
  return os.str();
}

void render_counts(std::ostream& os, const Json& counts, std::string_view heading) {
  os << std::setw(8) << "degree" << std::setw(10) << heading << "\n";
  for (const auto& entry : counts) {
    os << std::setw(8) << entry["degree"].get<Int>() << std::setw(10) << entry["count"].get<Int>() << "\n";
  }
}

void render_maps(std::ostream& os, const Json& maps) {
  os << "multiplication maps I_d (x) R_1 -> I_{d+1}\n";
  os << std::setw(8) << "degree" << std::setw(10) << "cokernel" << std::setw(10) << "kernel" << "  maximal rank\n";
  for (const auto& m : maps) {
    os << std::setw(8) << m["degree"].get<Int>() << std::setw(10) << m["cokernel"].get<Int>() << std::setw(10)
       << m["kernel"].get<Int>() << "  " << (m["maximal_rank"].get<bool>() ? "yes" : "no") << "\n";
  }
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  const Json& q = doc["query"];
  const Json& res = doc["results"];
  const std::string command = q["command"].get<std::string>();
  const std::string mode = q["mode"].get<std::string>();

  if (command == "check-gigc") {
    os << "maximal rank for I(m(p1+...+p" << q["points"].get<int>() << ")), 1 <= m <= " << q["max_mult"].get<Int>()
       << ": ";
    if (res["holds"].get<bool>()) {
      os << "holds\n";
    } else {
      const Json& f = res["first_failure"];
      os << "fails\nfirst failure: m = " << f["m"].get<Int>() << ", d = " << f["d"].get<Int>()
         << " (cokernel " << f["cokernel"].get<Int>() << ", kernel " << f["kernel"].get<Int>() << ")\n";
    }
    return os.str();
  }

  os << scheme_name(q) << " [" << mode << "]\n";
  if (command == "hilbert") {
    os << "alpha = " << res["alpha"].get<Int>() << "  tau = " << res["tau"].get<Int>() << "\n";
    os << std::setw(8) << "degree" << std::setw(12) << "dim I_d" << "\n";
    for (const auto& row : res["hilbert"]) {
      os << std::setw(8) << row["degree"].get<Int>() << std::setw(12) << row["dimension"].get<Int>() << "\n";
    }
  } else if (command == "gens") {
    os << "alpha = " << res["alpha"].get<Int>() << "  tau = " << res["tau"].get<Int>()
       << "  omega = " << res["omega"].get<Int>() << "  total = " << res["total"].get<Int>() << "\n";
    render_counts(os, res["generators"], "count");
    render_maps(os, res["multiplication_maps"]);
  } else if (command == "resolution") {
    os << "alpha = " << res["alpha"].get<Int>() << "  tau = " << res["tau"].get<Int>()
       << "  omega = " << res["omega"].get<Int>() << "\n";
    auto module_line = [&](const Json& counts) {
      std::string line;
      for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        if (!line.empty()) line += " + ";
        line += "R(-" + std::to_string((*it)["degree"].get<Int>()) + ")^" + std::to_string((*it)["count"].get<Int>());
      }
      return line.empty() ? std::string("0") : line;
    };
    os << "0 -> " << module_line(res["syzygies"]) << " -> " << module_line(res["generators"]) << " -> I -> 0\n";
  } else if (command == "decompose") {
    os << "degree " << q["degree"].get<Int>() << ": F = " << class_text(res["original"]) << "\n";
    os << "free part  H = " << class_text(res["free_part"]) << "\n";
    os << "fixed part N = " << class_text(res["fixed_part"]) << "\n";
    os << "h0 = " << res["h0"].get<Int>() << "  h1 = " << res["h1"].get<Int>() << "\n";
    const Json& c = res["cokernel"];
    os << "cokernel of I_d (x) R_1 -> I_{d+1}: " << c["total"].get<Int>() << " = " << c["free_part"].get<Int>()
       << " (free part) + " << c["fixed_part"].get<Int>() << " (fixed part)\n";
  } else if (command == "oracle-verify") {
    os << "oracle over F_" << q["prime"].get<std::uint64_t>() << ", degrees " << res["first_degree"].get<Int>()
       << ".." << res["last_degree"].get<Int>() << ", policy " << q["policy"].get<std::string>() << "\n";
    for (const auto& t : res["trials"]) {
      os << "  seed " << t["seed"].get<std::uint64_t>() << ": " << (t["matched"].get<bool>() ? "match" : "mismatch")
         << "\n";
      for (const auto& msg : t["mismatches"]) os << "    " << msg.get<std::string>() << "\n";
    }
    os << (res["passed"].get<bool>() ? "pass" : "fail") << "\n";
  }
  return os.str();
}

std::map<Int, Int> counts_from_json(const Json& counts) {
  std::map<Int, Int> out;
  for (const auto& entry : counts) out[entry["degree"].get<Int>()] = entry["count"].get<Int>();
  return out;
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "betti") {
    BettiResolution res;
    res.generators = counts_from_json(doc["results"]["generators"]);
    res.syzygies = counts_from_json(doc["results"]["syzygies"]);
    return betti_table(res);
  }
  return render_text(doc);
}

void add_scheme_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--points,-r", opt.points, "number of general points r")->required();
  cmd->add_option("--mult,-m", opt.mult, "uniform multiplicity m")->required();
}

}  // namespace

std::string betti_table(const BettiResolution& res) {
  std::map<Int, std::pair<Int, Int>> rows;  // row -> (column 0, column 1)
  Int total0 = 0;
  Int total1 = 0;
  for (const auto& [j, a] : res.generators) {
    rows[j].first = a;
    total0 += a;
  }
  for (const auto& [j, b] : res.syzygies) {
    rows[j - 1].second = b;
    total1 += b;
  }
  const auto cell = [](Int v) { return v == 0 ? std::string(".") : std::to_string(v); };
  std::size_t width = std::max(std::to_string(total0).size(), std::to_string(total1).size()) + 2;
  std::size_t label = std::string("total").size();
  if (!rows.empty()) label = std::max(label, std::to_string(rows.rbegin()->first).size());

  std::ostringstream os;
  os << std::setw(static_cast<int>(label + 1)) << "" << std::setw(static_cast<int>(width)) << 0
     << std::setw(static_cast<int>(width)) << 1 << "\n";
  os << std::setw(static_cast<int>(label)) << "total" << ":" << std::setw(static_cast<int>(width)) << total0
     << std::setw(static_cast<int>(width)) << total1 << "\n";
  for (const auto& [row, entry] : rows) {
    os << std::setw(static_cast<int>(label)) << row << ":" << std::setw(static_cast<int>(width)) << cell(entry.first)
       << std::setw(static_cast<int>(width)) << cell(entry.second) << "\n";
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Generators, Hilbert functions and resolutions of uniform fat point ideals in the plane", "fatpoints"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json", "betti"}));
  app.add_option("--out", opt.out_path, "write output to this file instead of stdout");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
  add_scheme_options(hilbert, opt);
  hilbert->add_option("--max-degree", opt.max_degree, "last degree to tabulate (default tau + 3)");
  hilbert->add_flag("--conjectural", opt.conjectural, "allow conjectural results for r > 9");

  auto* gens = app.add_subcommand("gens", "minimal generator counts by degree");
  add_scheme_options(gens, opt);
  gens->add_flag("--conjectural", opt.conjectural, "allow conjectural results for r > 9");

  auto* res = app.add_subcommand("resolution", "minimal free resolution");
  add_scheme_options(res, opt);
  res->add_flag("--conjectural", opt.conjectural, "allow conjectural results for r > 9");

  auto* dec = app.add_subcommand("decompose", "free and fixed parts of F(d, m, r)");
  add_scheme_options(dec, opt);
  dec->add_option("--degree,-d", opt.degree, "degree d")->required();

  auto* gigc = app.add_subcommand("check-gigc", "check maximal rank for all 1 <= m <= MMAX");
  gigc->add_option("--points,-r", opt.points, "number of general points r")->required();
  gigc->add_option("--max-mult", opt.max_mult, "largest multiplicity to scan")->required();

  auto* oracle = app.add_subcommand("oracle-verify", "compare closed forms with finite-field measurements");
  add_scheme_options(oracle, opt);
  oracle->add_option("--prime", opt.prime, "prime modulus in (2^30, 2^32)");
  oracle->add_option("--seed", opt.seed, "seed of the first trial");
  oracle->add_option("--trials", opt.trials, "number of independent trials");
  oracle->add_option("--policy", opt.policy, "all | any: trials that must match");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    if (opt.format == "betti" && command != "resolution") {
      throw UsageError("--format betti applies only to the resolution command");
    }
    Json doc;
    if (command == "hilbert") doc = cmd_hilbert(opt);
    else if (command == "gens") doc = cmd_gens(opt);
    else if (command == "resolution") doc = cmd_resolution(opt);
    else if (command == "decompose") doc = cmd_decompose(opt);
    else if (command == "check-gigc") doc = cmd_check_gigc(opt);
    else doc = cmd_oracle_verify(opt);

    const std::string text = render(doc, opt.format);
    if (opt.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.out_path);
      if (!file || !(file << text)) {
        err << "error: cannot write " << opt.out_path << "\n";
        return kExitRefused;
      }
    }
    if (command == "oracle-verify" && !doc["results"]["passed"].get<bool>()) return kExitOracleMismatch;
    return kExitSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  }
}

}  // namespace fatpoints
