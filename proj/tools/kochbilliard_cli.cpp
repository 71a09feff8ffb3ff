#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kochbilliard/experiment.hpp"
#include "kochbilliard/io.hpp"

namespace {

using namespace kb;
namespace fs = std::filesystem;

constexpr const char* kOutDirEnv = "KOCHBILLIARD_OUT_DIR";

struct Flags {
  std::string config;
  std::optional<int> level;
  std::optional<std::string> outDir;
  std::optional<unsigned> precisionBits;
  std::optional<std::size_t> maxEvents;
  std::optional<std::string> kernel;
  std::optional<std::string> angle;
  std::optional<std::string> basepoint;
  std::optional<std::string> levels;
  std::optional<std::string> sweepKind;
  std::optional<double> horizon;
  std::optional<double> epsilon;
  std::optional<int> nMax;
  std::string input;  // render
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

bool setsKey(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto b = line.find_first_not_of(" \t");
    if (b != std::string::npos && line.compare(b, key.size(), key) == 0) {
      const auto rest = line.find_first_not_of(" \t", b + key.size());
      if (rest != std::string::npos && line[rest] == '=') return true;
    }
  }
  return false;
}

// Precedence: flags, then the config file, then the environment, then defaults.
ExperimentConfig assemble(const std::string& kind, const Flags& f) {
  const std::string text = f.config.empty() ? std::string() : slurp(f.config);
  ExperimentConfig c = parseConfig(text);
  std::ostringstream extra;
  auto put = [&](const char* key, const auto& v) {
    if (v) extra << key << " = " << *v << "\n";
  };
  std::optional<std::string> outDir = f.outDir;
  if (!outDir && !setsKey(text, "outDir")) {
    if (const char* env = std::getenv(kOutDirEnv); env && *env) outDir = env;
  }
  put("level", f.level);
  put("outDir", outDir);
  put("precisionBits", f.precisionBits);
  put("maxEvents", f.maxEvents);
  put("kernel", f.kernel);
  put("angle", f.angle);
  put("basepoint", f.basepoint);
  put("levels", f.levels);
  put("sweepKind", f.sweepKind);
  put("horizon", f.horizon);
  put("epsilon", f.epsilon);
  put("nMax", f.nMax);
  extra << "kind = " << kind << "\n";
  // Re-parse so overrides go through the same validation as the file.
  std::string merged;
  std::istringstream base(configToText(c));
  const std::string overrides = extra.str();
  std::string line;
  while (std::getline(base, line)) {
    const std::string key = line.substr(0, line.find(' '));
    if (!setsKey(overrides, key)) merged += line + "\n";
  }
  try {
    return parseConfig(merged + overrides);
  } catch (const Error& e) {
    // the file already parsed, so the fault is in a flag; line numbers would mislead
    std::string msg = e.what();
    if (const auto colon = msg.find("line "); colon != std::string::npos) {
      msg.erase(colon, msg.find(": ", colon) + 2 - colon);
    }
    throw Error(ErrorCode::ConfigError, "command line: " + msg.substr(msg.find(' ') + 1));
  }
}

int render(const Flags& f) {
  ExperimentConfig c = assemble("table", f);
  fs::create_directories(c.outDir);
  const std::string text = slurp(f.input);
  std::string svg;
  if (text.rfind("kochbilliard-table", 0) == 0) {
    svg = renderTable(tableFromText(text).polygon, c.render);
  } else {
    const PrefractalTable t = buildKS(c.level);
    svg = renderOrbit(t.polygon, orbitFromJson(text), c.render);
  }
  const fs::path out = fs::path(c.outDir) / (fs::path(f.input).stem().string() + ".svg");
  std::ofstream(out, std::ios::binary) << svg;
  std::cout << out.string() << "\n";
  return 0;
}

int run(const std::string& kind, const Flags& f) {
  ExperimentResult r = runExperiment(assemble(kind, f));
  for (const SummaryRow& row : r.rows) {
    std::cout << row.run << ": " << row.status;
    if (!row.period.empty()) std::cout << ", period " << row.period;
    if (!row.label.empty()) std::cout << ", " << row.label;
    std::cout << "\n";
  }
  if (!r.ok) std::cerr << "a checked property failed; see summary.csv\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Billiards in Koch snowflake prefractals"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* s) {
    s->add_option("--config", f.config, "flat key = value config file")->check(CLI::ExistingFile);
    s->add_option("--level", f.level, "prefractal level");
    s->add_option("--out-dir", f.outDir, std::string("output directory (default: $") + kOutDirEnv + " or the config)");
    s->add_option("--precision-bits", f.precisionBits, "approximate-kernel precision");
    s->add_option("--max-events", f.maxEvents, "event budget");
    s->add_option("--kernel", f.kernel, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
    s->add_option("--angle", f.angle, "pi6:<k>, radians:<a/b> or cf:<order>");
    s->add_option("--basepoint", f.basepoint, "\"x y\" in exact form");
    s->add_option("--horizon", f.horizon, "shadowing horizon");
    s->add_option("--epsilon", f.epsilon, "shadowing tolerance (0 = automatic)");
    s->add_option("--n-max", f.nMax, "highest level for stability");
  };

  std::string chosen;
  for (const char* kind : {"table", "simulate", "gamma", "ppf", "surface", "quasi", "stability", "sweep"}) {
    CLI::App* s = app.add_subcommand(kind, std::string("run a ") + kind + " experiment");
    common(s);
    if (std::string(kind) == "sweep") {
      s->add_option("--levels", f.levels, "comma list of levels");
      s->add_option("--sweep-kind", f.sweepKind, "kind run at each level");
    }
    s->callback([&chosen, kind] { chosen = kind; });
  }
  CLI::App* r = app.add_subcommand("render", "render an exact orbit file or a table file as SVG");
  common(r);
  r->add_option("input", f.input, "orbit .json or table .txt")->required()->check(CLI::ExistingFile);
  r->callback([&chosen] { chosen = "render"; });

  CLI11_PARSE(app, argc, argv);
  try {
    return chosen == "render" ? render(f) : run(chosen, f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError ? 2 : 3;
  }
}
