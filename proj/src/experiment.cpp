#include "kochbilliard/experiment.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "kochbilliard/io.hpp"

namespace kb {
namespace fs = std::filesystem;

namespace {

constexpr std::array<ExperimentKind, 8> kKinds{ExperimentKind::Table, ExperimentKind::Simulate, ExperimentKind::Gamma,
                                               ExperimentKind::Ppf,   ExperimentKind::Surface,  ExperimentKind::Quasi,
                                               ExperimentKind::Stability, ExperimentKind::Sweep};

[[noreturn]] void bad(int line, const std::string& key, const std::string& msg) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
  throw Error(ErrorCode::ConfigError, where + (key.empty() ? "" : "'" + key + "': ") + msg);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> splitList(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

template <class I>
I parseInt(const std::string& v, int line, const std::string& key) {
  I out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) bad(line, key, "expected an integer, got '" + v + "'");
  return out;
}

double parseDouble(const std::string& v, int line, const std::string& key) {
  std::size_t used = 0;
  double out = 0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !std::isfinite(out)) bad(line, key, "expected a number, got '" + v + "'");
  return out;
}

bool parseBool(const std::string& v, int line, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  bad(line, key, "expected true or false, got '" + v + "'");
}

ExperimentKind parseKind(const std::string& v, int line, const std::string& key) {
  for (ExperimentKind k : kKinds) {
    if (v == name(k)) return k;
  }
  bad(line, key, "unknown kind '" + v + "'");
}

std::string checkColor(const std::string& v, int line, const std::string& key) {
  bool ok = v.size() == 7 && v[0] == '#';
  for (std::size_t i = 1; ok && i < v.size(); ++i) ok = std::isxdigit(static_cast<unsigned char>(v[i])) != 0;
  if (!ok) bad(line, key, "expected a #rrggbb color, got '" + v + "'");
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Parsed "angle" value.
struct AngleSpec {
  enum Kind { Pi6, Radians, Convergent } kind = Pi6;
  long k = 0;
  Rational radians;
  std::size_t order = 0;
};

AngleSpec parseAngle(const std::string& v, int line = 0) {
  const auto colon = v.find(':');
  if (colon == std::string::npos) bad(line, "angle", "expected pi6:<k>, radians:<a/b> or cf:<order>");
  const std::string tag = v.substr(0, colon), arg = v.substr(colon + 1);
  AngleSpec a;
  if (tag == "pi6") {
    a.kind = AngleSpec::Pi6;
    a.k = parseInt<long>(arg, line, "angle");
  } else if (tag == "radians") {
    a.kind = AngleSpec::Radians;
    try {
      a.radians = parseRational(arg);
    } catch (const Error&) {
      bad(line, "angle", "bad rational '" + arg + "'");
    }
    if (sign(a.radians) <= 0) bad(line, "angle", "radians must be positive");
  } else if (tag == "cf") {
    a.kind = AngleSpec::Convergent;
    a.order = parseInt<std::size_t>(arg, line, "angle");
    if (a.order < 1 || a.order > 30) bad(line, "angle", "convergent order must be in 1..30");
  } else {
    bad(line, "angle", "unknown angle form '" + tag + "'");
  }
  return a;
}

ExactVec parsePoint(const std::string& v, int line = 0) {
  std::istringstream is(v);
  std::string x, y, extra;
  if (!(is >> x >> y) || (is >> extra)) bad(line, "basepoint", "expected two exact scalars 'x y'");
  try {
    return {QSqrt3::parse(x), QSqrt3::parse(y)};
  } catch (const Error&) {
    bad(line, "basepoint", "bad exact scalar in '" + v + "'");
  }
}

// Convergent of pi/3 of the given order (1-based).
Rational convergentOfPiOver3(std::size_t order) {
  PrecisionScope p(static_cast<unsigned>(64 + 16 * order + 64));
  const Real theta = boost::math::constants::pi<Real>() / 3;
  ContinuedFractionApprox cf = cfConvergents(theta, order);
  return cf.convergents.at(order - 1);
}

Rational radiansOf(const AngleSpec& a) {
  if (a.kind == AngleSpec::Radians) return a.radians;
  if (a.kind == AngleSpec::Convergent) return convergentOfPiOver3(a.order);
  throw Error(ErrorCode::ConfigError, "'angle': this kind needs radians:<a/b> or cf:<order>");
}

void validate(const ExperimentConfig& c) {
  auto levelOk = [](int n) { return n >= 0 && n <= kMaxSnowflakeLevel; };
  if (!levelOk(c.level)) bad(0, "level", "must be in 0.." + std::to_string(kMaxSnowflakeLevel));
  for (int n : c.levels) {
    if (!levelOk(n)) bad(0, "levels", "level " + std::to_string(n) + " out of range");
  }
  if (c.kind == ExperimentKind::Sweep && c.levels.empty()) bad(0, "levels", "sweep needs at least one level");
  if (c.sweepKind == ExperimentKind::Sweep) bad(0, "sweepKind", "a sweep cannot run sweeps");
  if (!(c.horizon > 0)) bad(0, "horizon", "must be positive");
  if (c.epsilon < 0) bad(0, "epsilon", "must be non-negative");
  if (c.nMax < 0 || c.nMax > kMaxSnowflakeLevel) bad(0, "nMax", "out of range");
  if (c.precisionBits < 64 || c.precisionBits > 100000) bad(0, "precisionBits", "must be in 64..100000");
  if (c.outDir.empty()) bad(0, "outDir", "must not be empty");
  if (c.render.widthPx <= 0 || c.render.heightPx <= 0) bad(0, "render.width", "viewport must be positive");
  if (c.render.digits < 1 || c.render.digits > 200) bad(0, "render.digits", "must be in 1..200");
  if (!(c.render.tableStroke > 0) || !(c.render.orbitStroke > 0)) bad(0, "render.tableStroke", "strokes must be positive");
  if (c.render.levelColors.empty()) bad(0, "render.levelColors", "needs at least one color");
  parseAngle(c.angle);
  parsePoint(c.basepoint);
}

// ---- runs ----

struct Run {
  const ExperimentConfig& c;
  fs::path dir;
  ExperimentResult result;

  void write(const std::string& file, const std::string& content) {
    const fs::path p = dir / file;
    std::ofstream os(p, std::ios::binary);
    if (!os) throw Error(ErrorCode::InvalidArgument, "cannot write " + p.string());
    os << content;
    result.files.push_back(p);
  }

  void row(std::string run, std::string status, std::string period, std::string length, std::string label) {
    result.rows.push_back({std::move(run), std::move(status), std::move(period), std::move(length), std::move(label)});
  }

  template <class S>
  void orbitRow(const std::string& run, const OrbitRecord<S>& o, const std::string& label) {
    std::string period = o.status == OrbitStatus::Periodic ? std::to_string(o.period) : "";
    row(run, name(o.status), period, toDecimal(o.length, c.render.digits), label);
  }
};

InitialCondition<QSqrt3> exactCondition(const ExperimentConfig& c, const PrefractalTable& table) {
  AngleSpec a = parseAngle(c.angle);
  if (a.kind != AngleSpec::Pi6) bad(0, "angle", "the exact kernel needs pi6:<k>");
  InitialCondition<QSqrt3> ic{parsePoint(c.basepoint), unitDirection(static_cast<int>(((a.k % 12) + 12) % 12)),
                              AngleMultipleOfPi6{a.k, 0}};
  if (c.induce) ic = induceCondition(table, ic).condition;
  return ic;
}

void runTable(Run& r) {
  const PrefractalTable t = buildKS(r.c.level);
  r.write("table.txt", tableToText(t));
  r.write("table.svg", renderTable(t.polygon, r.c.render));
  r.row("KS_" + std::to_string(t.level), "built", "", toDecimal(QSqrt3(Rational(t.sideLength() * t.sideCount())), r.c.render.digits),
        std::to_string(t.sideCount()) + " sides");
}

void runSimulate(Run& r) {
  const PrefractalTable t = buildKS(r.c.level);
  const std::string run = "simulate KS_" + std::to_string(t.level);
  if (r.c.exactKernel) {
    ExactOrbit o = simulate(t.polygon, exactCondition(r.c, t), r.c.maxEvents);
    r.write("orbit.json", orbitToJson(o));
    r.write("orbit.csv", orbitToCsv(o, r.c.render.digits));
    r.write("orbit.svg", renderOrbit(t.polygon, o, r.c.render));
    r.orbitRow(run, o, name(classifyOrbit(t, o)));
    return;
  }
  PrecisionScope p(r.c.precisionBits);
  const AngleSpec a = parseAngle(r.c.angle);
  const ApproxPolygon poly = toApprox(t.polygon);
  ApproxVec d;
  if (a.kind == AngleSpec::Pi6) {
    d = toApprox(unitDirection(static_cast<int>(((a.k % 12) + 12) % 12)));
  } else {
    const Real th = QSqrt3(radiansOf(a)).toReal();
    d = ApproxVec(boost::multiprecision::cos(th), boost::multiprecision::sin(th));
  }
  const ApproxVec x0 = toApprox(parsePoint(r.c.basepoint));
  InitialCondition<Real> ic = r.c.induce ? induceApprox(poly, x0, d) : InitialCondition<Real>{x0, d, {}};
  ApproxOrbit o = simulate(poly, ic, r.c.maxEvents);
  r.write("orbit.csv", orbitToCsv(o, r.c.render.digits));
  r.write("orbit.svg", renderOrbit(t.polygon, o, r.c.render));
  std::string label = o.status == OrbitStatus::HitNonremovable ? name(OrbitClass::SingularObtuse)
                      : o.status == OrbitStatus::Exhausted      ? name(OrbitClass::Quasiperiodic)
                                                                : "approximate";
  if (o.candidateOnly) label += "; periodic within tolerance only";
  if (o.toleranceDependent) label += "; vertex snap";
  r.orbitRow(run, o, label);
}

void runGamma(Run& r) {
  const PrefractalTable t = buildKS(r.c.level);
  const GammaEnumeration g = enumerateGamma(t, r.c.maxEvents);
  std::vector<TaxonomyRow> rows;
  for (std::size_t i = 0; i < g.orbits.size(); ++i) {
    const ExactOrbit& o = g.orbits[i];
    rows.push_back({t.level, i, classifyOrbit(t, o), o.status, o.period, o.length});
  }
  r.write("taxonomy.csv", taxonomyCsv(rows, r.c.render.digits));
  SvgScene scene;
  scene.paths.push_back(tablePath(t.polygon, r.c.render, r.c.render.tableColor));
  const auto& colors = r.c.render.levelColors;
  for (std::size_t c = 0; c < g.representatives.size(); ++c) {
    const ExactOrbit& o = g.orbits[g.representatives[c]];
    SvgPath path = orbitPath(o, r.c.render);
    path.stroke = colors.size() > 1 ? colors[1 + c % (colors.size() - 1)] : colors[0];
    scene.paths.push_back(path);
    r.write("gamma_path_" + std::to_string(c) + ".json", orbitToJson(o));
  }
  r.write("gamma.svg", renderScene(scene, r.c.render));
  for (std::size_t c = 0; c < g.representatives.size(); ++c) {
    const ExactOrbit& o = g.orbits[g.representatives[c]];
    std::size_t members = 0;
    for (std::size_t k : g.pathClass) members += k == c;
    r.orbitRow("gamma_" + std::to_string(t.level) + " path " + std::to_string(c), o,
               std::string(name(classifyOrbit(t, o))) + "; " + std::to_string(members) + " of " +
                   std::to_string(g.orbits.size()) + " midpoints");
  }
  for (const ExactOrbit& o : g.orbits) {
    if (o.status != OrbitStatus::Periodic) r.result.ok = false;
  }
}

void runPpf(Run& r) {
  const int n = r.c.level;
  ExactOrbit o;
  try {
    o = ppfBySimulation(n, r.c.maxEvents);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPeriodic) throw;
    const PrefractalTable t = buildKS(n);
    o = simulate(t.polygon, induceCondition(t, fagnanoSource()).condition, r.c.maxEvents);
  }
  const PrefractalTable t = buildKS(n);
  r.write("ppf.json", orbitToJson(o));
  r.write("ppf.csv", orbitToCsv(o, r.c.render.digits));
  SvgScene scene;
  const auto& colors = r.c.render.levelColors;
  for (int k = 0; k <= n; ++k) {
    scene.paths.push_back(tablePath(buildKS(k).polygon, r.c.render, colors[static_cast<std::size_t>(k) % colors.size()]));
  }
  scene.paths.push_back(orbitPath(o, r.c.render));
  r.write("ppf.svg", renderScene(scene, r.c.render));
  std::string label = name(OrbitClass::PrimaryPiecewiseFagnano);
  if (o.status == OrbitStatus::Periodic) {
    const bool match = footprint(o) == ppfByIFS(n).footprint;
    label += match ? "; IFS footprint matches" : "; IFS footprint differs";
    r.result.ok = r.result.ok && match;
  } else {
    r.result.ok = false;
  }
  r.orbitRow("ppF_" + std::to_string(n), o, label);
}

void runSurface(Run& r) {
  const PrefractalTable t = buildKS(r.c.level);
  const FlatSurfaceModel s = buildSurface(t.polygon);
  r.write("surface.json", surfaceToJson(s));
  r.write("generalized_polygon.svg", renderGeneralizedPolygon(s, r.c.render));
  r.row("surface KS_" + std::to_string(t.level), "built", "", "",
        "copies " + std::to_string(s.copyCount()) + "; genus " + std::to_string(s.genus) + "; euler " +
            std::to_string(s.eulerCharacteristic));
}

std::string epsilonText(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", e);
  return buf;
}

void runQuasi(Run& r) {
  PrecisionScope p(r.c.precisionBits);
  const PrefractalTable t = buildKS(r.c.level);
  const Rational angle = radiansOf(parseAngle(r.c.angle));
  const ApproxOrbit q = quasiOrbit(t, parsePoint(r.c.basepoint), angle, r.c.horizon);
  const std::vector<LibraryOrbit> lib = gammaLibrary(t, r.c.maxEvents);
  r.write("quasi.csv", orbitToCsv(q, r.c.render.digits));
  r.write("quasi.svg", renderOrbit(t.polygon, q, r.c.render));
  std::optional<ShadowingCertificate> cert;
  if (r.c.epsilon == 0) {
    if (auto m = minimalEpsilon(q, lib, r.c.horizon)) cert = m->certificate;
  } else {
    cert = shadowingDecompose(q, lib, r.c.epsilon, r.c.horizon);
  }
  const std::string run = "quasi KS_" + std::to_string(t.level) + " angle " + toString(angle);
  if (!cert || !checkCertificate(q, lib, *cert)) {
    r.result.ok = false;
    r.orbitRow(run, q, "uncertified");
    return;
  }
  r.write("certificate.csv", certificateCsv(*cert, lib));
  r.orbitRow(run, q,
             "epsilon " + epsilonText(cert->epsilon) + "; " + std::to_string(cert->intervals.size()) + " intervals");
}

void runStability(Run& r) {
  PrecisionScope p(r.c.precisionBits);
  const Rational angle = radiansOf(parseAngle(r.c.angle));
  const ExactVec x0 = parsePoint(r.c.basepoint);
  const InitialCondition<QSqrt3> source = fagnanoSource();
  double eps = r.c.epsilon;
  if (eps == 0) {
    const ApproxOrbit q0 = quasiOrbit(buildKS(0), x0, angle, r.c.horizon);
    const ExactOrbit p0 = simulate(unitTriangle(), source, r.c.maxEvents);
    auto m = minimalEpsilon(q0, {{"F0", p0}}, r.c.horizon);
    if (!m) {
      r.result.ok = false;
      r.row("stability", "uncertified", "", "", "level 0 has no certificate");
      return;
    }
    eps = 2 * m->epsilon;
  }
  const StabilityReport rep = stabilityCheck(x0, angle, source, r.c.nMax, eps, r.c.horizon);
  std::string csv = csvRow({"level", "quasiStatus", "periodicStatus", "certified", "intervals", "achieved"});
  for (const StabilityLevel& l : rep.levels) {
    double achieved = 0;
    if (l.certificate) {
      for (const auto& iv : l.certificate->intervals) achieved = std::max(achieved, iv.achieved);
    }
    csv += csvRow({std::to_string(l.level), name(l.quasiStatus), name(l.periodicStatus), l.certificate ? "true" : "false",
                   l.certificate ? std::to_string(l.certificate->intervals.size()) : "0", fmt(achieved)});
    r.row("stability level " + std::to_string(l.level), l.certificate ? "certified" : "uncertified", "", "",
          "epsilon " + epsilonText(eps));
  }
  r.write("stability.csv", csv);
  r.row("stability", rep.stable ? "stable" : "unstable", "", "",
        "epsilon " + epsilonText(eps) + (rep.partitionsDiffer ? "; partitions differ" : "; partitions agree"));
  r.result.ok = r.result.ok && rep.stable;
}

ExperimentResult runIn(const ExperimentConfig& c, const fs::path& dir);

void runSweep(Run& r) {
  for (int n : r.c.levels) {
    ExperimentConfig sub = r.c;
    sub.kind = r.c.sweepKind;
    sub.level = n;
    sub.nMax = std::max(sub.nMax, n);
    const fs::path d = r.dir / ("level_" + std::to_string(n));
    sub.outDir = d.string();
    ExperimentResult res = runIn(sub, d);
    r.result.ok = r.result.ok && res.ok;
    r.result.files.insert(r.result.files.end(), res.files.begin(), res.files.end());
    for (SummaryRow row : res.rows) {
      row.run = "level " + std::to_string(n) + ": " + row.run;
      r.result.rows.push_back(std::move(row));
    }
  }
}

ExperimentResult runIn(const ExperimentConfig& c, const fs::path& dir) {
  validate(c);
  fs::create_directories(dir);
  Run r{c, dir, {}};
  r.write("config.txt", configToText(c));
  switch (c.kind) {
    case ExperimentKind::Table: runTable(r); break;
    case ExperimentKind::Simulate: runSimulate(r); break;
    case ExperimentKind::Gamma: runGamma(r); break;
    case ExperimentKind::Ppf: runPpf(r); break;
    case ExperimentKind::Surface: runSurface(r); break;
    case ExperimentKind::Quasi: runQuasi(r); break;
    case ExperimentKind::Stability: runStability(r); break;
    case ExperimentKind::Sweep: runSweep(r); break;
  }
  std::string csv = csvRow({"run", "status", "period", "length", "label"});
  for (const SummaryRow& row : r.result.rows) csv += csvRow({row.run, row.status, row.period, row.length, row.label});
  r.write("summary.csv", csv);
  return r.result;
}

}  // namespace

const char* name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Table: return "table";
    case ExperimentKind::Simulate: return "simulate";
    case ExperimentKind::Gamma: return "gamma";
    case ExperimentKind::Ppf: return "ppf";
    case ExperimentKind::Surface: return "surface";
    case ExperimentKind::Quasi: return "quasi";
    case ExperimentKind::Stability: return "stability";
    case ExperimentKind::Sweep: return "sweep";
  }
  return "?";
}

ExperimentConfig parseConfig(std::string_view text) {
  ExperimentConfig c;
  std::map<std::string, int> seen;
  std::istringstream is{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) bad(line, "", "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq)), v = trim(s.substr(eq + 1));
    if (key.empty()) bad(line, "", "missing key");
    if (auto it = seen.find(key); it != seen.end()) {
      bad(line, key, "repeated key (first set on line " + std::to_string(it->second) + ")");
    }
    seen[key] = line;
    if (key == "kind") c.kind = parseKind(v, line, key);
    else if (key == "level") c.level = parseInt<int>(v, line, key);
    else if (key == "levels") {
      c.levels.clear();
      for (const std::string& item : splitList(v)) c.levels.push_back(parseInt<int>(item, line, key));
    } else if (key == "sweepKind") c.sweepKind = parseKind(v, line, key);
    else if (key == "basepoint") {
      parsePoint(v, line);
      c.basepoint = v;
    } else if (key == "angle") {
      parseAngle(v, line);
      c.angle = v;
    } else if (key == "induce") c.induce = parseBool(v, line, key);
    else if (key == "kernel") {
      if (v != "exact" && v != "approx") bad(line, key, "expected exact or approx, got '" + v + "'");
      c.exactKernel = v == "exact";
    } else if (key == "maxEvents") c.maxEvents = parseInt<std::size_t>(v, line, key);
    else if (key == "horizon") c.horizon = parseDouble(v, line, key);
    else if (key == "epsilon") c.epsilon = parseDouble(v, line, key);
    else if (key == "nMax") c.nMax = parseInt<int>(v, line, key);
    else if (key == "precisionBits") c.precisionBits = parseInt<unsigned>(v, line, key);
    else if (key == "outDir") c.outDir = v;
    else if (key == "render.width") c.render.widthPx = parseInt<int>(v, line, key);
    else if (key == "render.height") c.render.heightPx = parseInt<int>(v, line, key);
    else if (key == "render.digits") c.render.digits = parseInt<int>(v, line, key);
    else if (key == "render.tableStroke") c.render.tableStroke = parseDouble(v, line, key);
    else if (key == "render.orbitStroke") c.render.orbitStroke = parseDouble(v, line, key);
    else if (key == "render.orbitColor") c.render.orbitColor = checkColor(v, line, key);
    else if (key == "render.levelColors") {
      c.render.levelColors.clear();
      for (const std::string& item : splitList(v)) c.render.levelColors.push_back(checkColor(item, line, key));
    } else {
      bad(line, key, "unknown key");
    }
  }
  validate(c);
  return c;
}

std::string configToText(const ExperimentConfig& c) {
  std::ostringstream os;
  auto join = [](const auto& items) {
    std::string out;
    for (const auto& i : items) {
      if (!out.empty()) out += ",";
      if constexpr (std::is_same_v<std::decay_t<decltype(i)>, std::string>) {
        out += i;
      } else {
        out += std::to_string(i);
      }
    }
    return out;
  };
  os << "kind = " << name(c.kind) << "\n";
  os << "level = " << c.level << "\n";
  os << "levels = " << join(c.levels) << "\n";
  os << "sweepKind = " << name(c.sweepKind) << "\n";
  os << "basepoint = " << c.basepoint << "\n";
  os << "angle = " << c.angle << "\n";
  os << "induce = " << (c.induce ? "true" : "false") << "\n";
  os << "kernel = " << (c.exactKernel ? "exact" : "approx") << "\n";
  os << "maxEvents = " << c.maxEvents << "\n";
  os << "horizon = " << fmt(c.horizon) << "\n";
  os << "epsilon = " << fmt(c.epsilon) << "\n";
  os << "nMax = " << c.nMax << "\n";
  os << "precisionBits = " << c.precisionBits << "\n";
  os << "outDir = " << c.outDir << "\n";
  os << "render.width = " << c.render.widthPx << "\n";
  os << "render.height = " << c.render.heightPx << "\n";
  os << "render.digits = " << c.render.digits << "\n";
  os << "render.tableStroke = " << fmt(c.render.tableStroke) << "\n";
  os << "render.orbitStroke = " << fmt(c.render.orbitStroke) << "\n";
  os << "render.orbitColor = " << c.render.orbitColor << "\n";
  os << "render.levelColors = " << join(c.render.levelColors) << "\n";
  return os.str();
}

ExperimentResult runExperiment(const ExperimentConfig& config) { return runIn(config, config.outDir); }

}  // namespace kb
