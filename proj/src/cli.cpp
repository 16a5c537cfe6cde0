#include "hopf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/chains.hpp"
#include "hopf/diffhopf.hpp"
#include "hopf/grading.hpp"
#include "hopf/pareigis.hpp"
#include "hopf/semidirect.hpp"

namespace hopf {

namespace {

const std::set<std::string> kCommands = {"check-axioms",    "build-semidirect", "verify-pareigis",
                                         "roundtrip",       "carrier-check",    "bicomplex-check"};

// 0 for rings other than laurent[:r], else r.
std::size_t laurentRank(const std::string& ring) {
  if (ring == "laurent") return 1;
  if (ring.rfind("laurent:", 0) != 0) return 0;
  const std::string digits = ring.substr(8);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ConfigError("bad laurent rank in ring '" + ring + "'");
  }
  const int r = std::stoi(digits);
  if (r < 1) throw ConfigError("laurent rank must be >= 1, got " + digits);
  return static_cast<std::size_t>(r);
}

struct Item {
  std::string name;
  std::string verdict;
  nlohmann::json counterexample;  // null when absent
  std::size_t instances = 0;
  double millis = 0;
};

bool passing(const std::string& verdict) { return verdict == "Equal" || verdict == "Accept"; }

class Suite {
 public:
  explicit Suite(bool timing) : timing_(timing) {}

  // Runs fn, timing it, and appends the items it returns.
  void run(const std::function<std::vector<Item>()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Item> items = fn();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& i : items) {
      i.millis = ms;
      items_.push_back(std::move(i));
    }
  }

  RunResult finish(const RunConfig& cfg) {
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Item& a, const Item& b) { return a.name < b.name; });
    nlohmann::json results = nlohmann::json::array();
    int exitCode = 0;
    for (const Item& i : items_) {
      nlohmann::json j = {{"name", i.name}, {"verdict", i.verdict}, {"instances", i.instances}};
      if (!i.counterexample.is_null()) j["counterexample"] = i.counterexample;
      j["millis"] = timing_ ? nlohmann::json(i.millis) : nlohmann::json(nullptr);
      results.push_back(std::move(j));
      if (!passing(i.verdict)) exitCode = 1;
    }
    return {exitCode,
            {{"version", kVersion}, {"config", cfg.toJson()}, {"results", std::move(results)}}};
  }

 private:
  bool timing_;
  std::vector<Item> items_;
};

std::vector<Item> lawItems(const LawReport& r) {
  std::vector<Item> out;
  for (const LawResult& l : r.laws) {
    const nlohmann::json j = toJson(l.verdict);
    out.push_back({l.law, l.verdict.equal ? "Equal" : "Differ",
                   j.contains("counterexample") ? j.at("counterexample") : nlohmann::json(),
                   l.verdict.instances, 0});
  }
  return out;
}

GradedCarrier loadCarrier(const RunConfig& cfg, bool required) {
  nlohmann::json j;
  if (cfg.carrier) {
    j = *cfg.carrier;
  } else if (!cfg.carrierFile.empty()) {
    std::ifstream in(cfg.carrierFile);
    if (!in) throw ConfigError("cannot read carrier file " + cfg.carrierFile);
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ConfigError("carrier file " + cfg.carrierFile + " is not JSON: " + e.what());
    }
  } else if (required) {
    throw ConfigError(cfg.command + " needs --carrier or --carrier-file");
  } else {
    return GradedCarrier{1, {{{cfg.s}, 0}}};
  }
  try {
    return GradedCarrier::fromJson(j).normalized();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("malformed carrier: ") + e.what());
  }
}

Bicharacter bicharacterFor(const GradedCarrier& d, int kappa) {
  return Bicharacter{std::vector<int>(d.rank, kappa)};
}

Item carrierItem(const GradedCarrier& d, const Bicharacter& b) {
  CarrierVerdict v;
  try {
    v = checkDifferentialCarrier(d, b);
  } catch (const RankMismatch& e) {
    throw ConfigError(e.what());
  }
  Item i{"differential carrier", v.accepted ? "Accept" : "Reject", nlohmann::json(), d.summands.size(), 0};
  if (!v.diagnostics.empty()) i.counterexample = {{"diagnostics", v.diagnostics}};
  return i;
}

// Builds H = I (+) D, or returns nullopt after recording a rejected carrier.
std::optional<ComoduleBimonoid> differentialHopf(const RunConfig& cfg, Suite& suite) {
  const GradedCarrier d = loadCarrier(cfg, false);
  const Bicharacter b = bicharacterFor(d, cfg.kappa);
  bool accepted = false;
  suite.run([&] {
    Item i = carrierItem(d, b);
    accepted = i.verdict == "Accept";
    return std::vector<Item>{i};
  });
  if (!accepted) return std::nullopt;
  if (!d.isFree()) throw ConfigError("torsion carriers are decided but cannot be built into a Hopf ring");
  const Coelement c = signCoelement(b);
  return buildDifferentialHopf(differentialComodule(d, c), c);
}

void checkAxioms(const RunConfig& cfg, Suite& suite) {
  if (cfg.ring == "pareigis" || cfg.ring == "pareigis-plus") {
    const Bimonoid p = pareigisRing(pareigisSignFromName(cfg.ring));
    suite.run([&] { return lawItems(checkBialgebraLaws(p, plainBraiding(), cfg.window)); });
  } else if (const std::size_t r = laurentRank(cfg.ring)) {
    const Bimonoid z = laurentHopf(r);
    suite.run([&] { return lawItems(checkBialgebraLaws(z, plainBraiding(), cfg.window)); });
    const Coelement c = signCoelement(Bicharacter{std::vector<int>(r, cfg.kappa)});
    suite.run([&] { return lawItems(checkCoelement(c, cfg.window)); });
  } else {
    const auto hb = differentialHopf(cfg, suite);
    if (hb) suite.run([&] { return lawItems(checkComoduleBimonoid(*hb, cfg.window)); });
  }
}

void buildSemidirect(const RunConfig& cfg, Suite& suite) {
  const auto hb = differentialHopf(cfg, suite);
  if (!hb) return;
  suite.run([&] {
    const SemidirectRing q = semidirectProductUnchecked(*hb);
    return lawItems(checkBialgebraLaws(q.ring, plainBraiding(), cfg.window));
  });
}

nlohmann::json trialCounterexample(int t, const ChainComplex& x) {
  return {{"trial", t}, {"complex", x.toJson()}};
}

void roundtrip(const RunConfig& cfg, Suite& suite) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<ChainComplex> samples;
  for (int t = 0; t < cfg.trials; ++t) samples.push_back(randomComplex(rng, 7, 4, cfg.s));
  suite.run([&] {
    Item there{"chain to comodule to chain", "Equal", nlohmann::json(), 0, 0};
    Item back{"comodule to chain to comodule", "Equal", nlohmann::json(), 0, 0};
    for (int t = 0; t < cfg.trials; ++t) {
      const ChainComplex& x = samples[static_cast<std::size_t>(t)];
      const Comodule b = chainToComodule(x, cfg.s);
      const ChainComplex y = comoduleToChain(b);
      ++there.instances;
      if (!sameComplex(x, y) && there.verdict == "Equal") {
        there.verdict = "Differ";
        there.counterexample = trialCounterexample(t, x);
      }
      const Verdict v = equalOnWindow(chainToComodule(y, cfg.s).coaction(), b.coaction(), 0);
      ++back.instances;
      if (!v.equal && back.verdict == "Equal") {
        back.verdict = "Differ";
        back.counterexample = trialCounterexample(t, x);
        back.counterexample["at"] = toJson(v).at("counterexample");
      }
    }
    return std::vector<Item>{there, back};
  });
  suite.run([&] { return lawItems(comparisonBattery(cfg.s, samples)); });
}

void carrierCheck(const RunConfig& cfg, Suite& suite) {
  const GradedCarrier d = loadCarrier(cfg, true);
  suite.run([&] { return std::vector<Item>{carrierItem(d, bicharacterFor(d, cfg.kappa))}; });
}

void bicomplexCheck(const RunConfig& cfg, Suite& suite) {
  std::mt19937_64 rng(cfg.seed);
  suite.run([&] {
    Item legal{"emitted coaction is legal", "Equal", nlohmann::json(), 0, 0};
    Item rejects{"wrong square is rejected", "Equal", nlohmann::json(), 0, 0};
    for (int t = 0; t < cfg.trials; ++t) {
      Bicomplex b = randomBicomplex(rng, cfg.kappa, cfg.s);
      ++legal.instances;
      try {
        const SecondDifferentialResult r = secondDifferential(b);
        if (!r.legality.ok() && legal.verdict == "Equal") {
          legal.verdict = "Differ";
          legal.counterexample = {{"trial", t}, {"law", r.legality.firstFailure()->law}};
        }
      } catch (const std::exception& e) {
        if (legal.verdict == "Equal") {
          legal.verdict = "Differ";
          legal.counterexample = {{"trial", t}, {"error", e.what()}};
        }
      }
      // Negating d' on odd columns swaps the two square laws wherever
      // d d' != 0.
      bool nonzero = false;
      for (const auto& [nm, m] : b.dPrime) {
        if (!(b.dAt(nm.first - b.shift(), nm.second - 1) * m).isZero()) nonzero = true;
      }
      if (!nonzero) continue;
      for (auto& [nm, m] : b.dPrime) {
        if (nm.first % 2 != 0) m = -m;
      }
      ++rejects.instances;
      bool threw = false;
      try {
        secondDifferential(b);
      } catch (const SquareViolation&) {
        threw = true;
      }
      if (!threw && rejects.verdict == "Equal") {
        rejects.verdict = "Differ";
        rejects.counterexample = {{"trial", t}};
      }
    }
    return std::vector<Item>{legal, rejects};
  });
}

}  // namespace

void RunConfig::validate() const {
  if (!kCommands.count(command)) throw ConfigError("unknown command '" + command + "'");
  if (ring != "pareigis" && ring != "pareigis-plus" && ring != "diffhopf" && laurentRank(ring) == 0) {
    throw ConfigError("unknown ring '" + ring + "'");
  }
  if (window < 1) throw ConfigError("--window must be >= 1");
  if (trials < 1) throw ConfigError("--trials must be >= 1");
  if (format != "json" && format != "text") throw ConfigError("--format must be json or text");
  if (kappa != 1 && kappa != -1) throw ConfigError("--kappa must be 1 or -1");
  if (s == 0) throw ConfigError("--s must be nonzero");
  if ((command == "verify-pareigis" || command == "roundtrip") && s != 1 && s != -1) {
    throw ConfigError(command + " needs --s = 1 or -1");
  }
  if (carrier && !carrierFile.empty()) throw ConfigError("give --carrier or --carrier-file, not both");
}

nlohmann::json RunConfig::toJson() const {
  nlohmann::json j = {{"command", command}, {"ring", ring},   {"window", window},
                      {"trials", trials},   {"seed", seed},   {"s", s},
                      {"kappa", kappa},     {"format", format}};
  if (carrier) j["carrier"] = *carrier;
  if (!carrierFile.empty()) j["carrier_file"] = carrierFile;
  return j;
}

RunResult runCommand(const RunConfig& cfg) {
  cfg.validate();
  Suite suite(cfg.timing);
  if (cfg.command == "check-axioms") {
    checkAxioms(cfg, suite);
  } else if (cfg.command == "build-semidirect") {
    buildSemidirect(cfg, suite);
  } else if (cfg.command == "verify-pareigis") {
    suite.run([&] { return lawItems(identifySemidirect(cfg.s, cfg.window)); });
  } else if (cfg.command == "roundtrip") {
    roundtrip(cfg, suite);
  } else if (cfg.command == "carrier-check") {
    carrierCheck(cfg, suite);
  } else {
    bicomplexCheck(cfg, suite);
  }
  return suite.finish(cfg);
}

std::string renderText(const nlohmann::json& report) {
  std::ostringstream os;
  os << "hopfcheck " << report.at("version").get<std::string>() << " "
     << report.at("config").at("command").get<std::string>() << "\n";
  bool ok = true;
  for (const auto& r : report.at("results")) {
    const std::string verdict = r.at("verdict").get<std::string>();
    ok = ok && passing(verdict);
    os << r.at("name").get<std::string>() << ": " << verdict << " (" << r.at("instances").get<std::size_t>()
       << " instances";
    if (!r.at("millis").is_null()) os << ", " << r.at("millis").get<double>() << " ms";
    os << ")\n";
    if (!r.contains("counterexample")) continue;
    const auto& c = r.at("counterexample");
    if (c.contains("diagnostics")) {
      for (const auto& d : c.at("diagnostics")) os << "  " << d.get<std::string>() << "\n";
    } else if (c.contains("label")) {
      os << "  at " << c.at("label").get<std::string>() << ": " << c.at("lhs").get<std::string>()
         << " != " << c.at("rhs").get<std::string>() << "\n";
    } else {
      os << "  " << c.dump() << "\n";
    }
  }
  os << (ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds Hopf rings and verifies their laws on finite windows", "hopfcheck"};
  RunConfig cfg;
  std::string positional;
  std::string flagCommand;
  std::string carrierText;
  app.add_option("cmd", positional,
                 "check-axioms | build-semidirect | verify-pareigis | roundtrip | carrier-check | "
                 "bicomplex-check");
  app.add_option("--command", flagCommand, "Same as the positional command");
  app.add_option("--ring", cfg.ring, "pareigis | pareigis-plus | laurent[:r] | diffhopf")
      ->capture_default_str();
  app.add_option("--carrier", carrierText, "Graded carrier as inline JSON");
  app.add_option("--carrier-file", cfg.carrierFile, "Graded carrier JSON file");
  app.add_option("--window", cfg.window, "Window K")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for the random generator")->capture_default_str();
  app.add_option("--s", cfg.s, "Degree of the differential carrier")->capture_default_str();
  app.add_option("--kappa", cfg.kappa, "Sign bicharacter value, 1 or -1")->capture_default_str();
  app.add_option("--format", cfg.format, "json | text")->capture_default_str();
  app.add_option("--output", cfg.output, "Report path (default stdout)");
  app.add_flag("--timing", cfg.timing, "Record wall time per result");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hopfcheck: " << e.what() << "\n";
    return 2;
  }

  RunResult result;
  try {
    if (!positional.empty() && !flagCommand.empty() && positional != flagCommand) {
      throw ConfigError("conflicting commands '" + positional + "' and '" + flagCommand + "'");
    }
    cfg.command = positional.empty() ? flagCommand : positional;
    if (cfg.command.empty()) throw ConfigError("no command given");
    if (!carrierText.empty()) {
      try {
        cfg.carrier = nlohmann::json::parse(carrierText);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("--carrier is not JSON: ") + e.what());
      }
    }
    result = runCommand(cfg);
  } catch (const ConfigError& e) {
    err << "hopfcheck: " << e.what() << "\n";
    return 2;
  }

  const std::string text = cfg.format == "json" ? result.report.dump(2) + "\n" : renderText(result.report);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output);
    if (!f || !(f << text)) {
      err << "hopfcheck: cannot write " << cfg.output << "\n";
      return 2;
    }
  }
  for (const auto& r : result.report.at("results")) {
    if (r.contains("counterexample") && r.at("counterexample").contains("diagnostics")) {
      for (const auto& d : r.at("counterexample").at("diagnostics")) {
        err << "hopfcheck: " << d.get<std::string>() << "\n";
      }
    }
  }
  return result.exitCode;
}

}  // namespace hopf
