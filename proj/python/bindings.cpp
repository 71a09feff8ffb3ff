#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kochbilliard/experiment.hpp"
#include <boost/math/constants/constants.hpp>

#include "kochbilliard/io.hpp"

namespace py = pybind11;
using namespace kb;

namespace {

py::tuple point(const ExactVec& v) { return py::make_tuple(v.x.str(), v.y.str()); }

ExactVec parsePoint(const std::string& text) {
  std::istringstream is(text);
  std::string x, y;
  if (!(is >> x >> y)) throw Error(ErrorCode::InvalidArgument, "expected 'x y'");
  return {QSqrt3::parse(x), QSqrt3::parse(y)};
}

py::dict orbitDict(const PrefractalTable& t, const ExactOrbit& o) {
  py::list events;
  for (const auto& e : o.events) {
    events.append(py::dict(py::arg("point") = point(e.point), py::arg("locus") = locusText(e.locus),
                           py::arg("cumulative_length") = e.cumulativeLength.str()));
  }
  return py::dict(py::arg("status") = name(o.status), py::arg("period") = o.period, py::arg("length") = o.length.str(),
                  py::arg("label") = name(classifyOrbit(t, o)), py::arg("events") = events,
                  py::arg("json") = orbitToJson(o));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact billiards in Koch snowflake prefractals";
  py::register_exception<Error>(m, "KochBilliardError", PyExc_ValueError);

  m.def(
      "table",
      [](int level) {
        const PrefractalTable t = buildKS(level);
        py::list vs, kinds;
        for (std::size_t i = 0; i < t.sideCount(); ++i) {
          vs.append(point(t.polygon.vertex(i)));
          kinds.append(name(t.vertexKind(i)));
        }
        return py::dict(py::arg("level") = level, py::arg("vertices") = vs, py::arg("kinds") = kinds,
                        py::arg("text") = tableToText(t));
      },
      py::arg("level"), "Vertices of KS_n in exact form.");

  m.def(
      "simulate",
      [](int level, const std::string& basepoint, long pi6, std::size_t maxEvents, bool induce) {
        const PrefractalTable t = buildKS(level);
        InitialCondition<QSqrt3> ic{parsePoint(basepoint), unitDirection(static_cast<int>(((pi6 % 12) + 12) % 12)),
                                    AngleMultipleOfPi6{pi6, 0}};
        if (induce) ic = induceCondition(t, ic).condition;
        return orbitDict(t, simulate(t.polygon, ic, maxEvents));
      },
      py::arg("level"), py::arg("basepoint") = "1/2 0", py::arg("pi6") = 2, py::arg("max_events") = 10000,
      py::arg("induce") = true, "Exact orbit launched at pi6 * pi/6 from the x-axis.");

  m.def(
      "gamma",
      [](int level, std::size_t maxEvents) {
        const PrefractalTable t = buildKS(level);
        const GammaEnumeration g = enumerateGamma(t, maxEvents);
        py::list labels;
        for (const ExactOrbit& o : g.orbits) labels.append(name(classifyOrbit(t, o)));
        return py::dict(py::arg("distinct_paths") = g.distinctPaths(), py::arg("path_class") = g.pathClass,
                        py::arg("labels") = labels);
      },
      py::arg("level"), py::arg("max_events") = 10000);

  m.def(
      "ppf_footprint",
      [](int level, const std::string& method) {
        std::vector<ExactVec> pts;
        if (method == "ifs") {
          pts = ppfByIFS(level).footprint;
        } else if (method == "simulation") {
          pts = footprint(ppfBySimulation(level, 100000));
        } else {
          throw Error(ErrorCode::InvalidArgument, "method must be 'ifs' or 'simulation'");
        }
        py::list out;
        for (const ExactVec& p : pts) out.append(point(p));
        return out;
      },
      py::arg("level"), py::arg("method") = "ifs");

  m.def(
      "surface",
      [](int level) {
        const FlatSurfaceModel s = buildSurface(buildKS(level).polygon);
        return py::dict(py::arg("copies") = s.copyCount(), py::arg("genus") = s.genus,
                        py::arg("euler_characteristic") = s.eulerCharacteristic);
      },
      py::arg("level"));

  m.def(
      "cone_angle",
      [](const std::vector<std::pair<long, long>>& angles, std::size_t vertex) {
        std::vector<RationalAngle> as;
        for (auto [a, b] : angles) as.push_back(makeAngle(a, b));
        return coneAngle(RationalAngleSpec::from(as), vertex);
      },
      py::arg("angles"), py::arg("vertex"), "Angles as (m, n) for m pi / n; returns (m_j, removable).");

  m.def(
      "cf_convergents_pi_over_3",
      [](std::size_t count) {
        PrecisionScope p(static_cast<unsigned>(128 + 16 * count));
        const Real theta = boost::math::constants::pi<Real>() / 3;
        std::vector<std::string> out;
        for (const Rational& r : cfConvergents(theta, count).convergents) out.push_back(toString(r));
        return out;
      },
      py::arg("count"));

  m.def(
      "orbit_json_round_trip",
      [](const std::string& text) { return orbitToJson(orbitFromJson(text)); }, py::arg("text"));

  m.def(
      "run_experiment",
      [](const std::string& configText) {
        ExperimentResult r = runExperiment(parseConfig(configText));
        py::list rows, files;
        for (const SummaryRow& row : r.rows) {
          rows.append(py::dict(py::arg("run") = row.run, py::arg("status") = row.status, py::arg("period") = row.period,
                               py::arg("length") = row.length, py::arg("label") = row.label));
        }
        for (const auto& f : r.files) files.append(f.string());
        return py::dict(py::arg("ok") = r.ok, py::arg("rows") = rows, py::arg("files") = files);
      },
      py::arg("config"), "Runs a flat key = value config.");
}
