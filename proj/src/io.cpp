#include "kochbilliard/io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace kb {
namespace {

using nlohmann::json;

constexpr const char* kEol = "\r\n";  // RFC 4180

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmtDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json vec(const ExactVec& v) { return json::array({v.x.str(), v.y.str()}); }

ExactVec readVec(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "expected a point [x, y]");
  return {QSqrt3::parse(j[0].get<std::string>()), QSqrt3::parse(j[1].get<std::string>())};
}

json mat(const Mat2& m) { return json::array({m.a.str(), m.b.str(), m.c.str(), m.d.str()}); }

OrbitStatus statusFrom(const std::string& s) {
  for (OrbitStatus st : {OrbitStatus::Periodic, OrbitStatus::HitNonremovable, OrbitStatus::Exhausted}) {
    if (s == name(st)) return st;
  }
  throw Error(ErrorCode::ParseError, "unknown orbit status " + s);
}

json locusJson(const Locus& l) {
  json j;
  j["kind"] = l.kind == LocusKind::Vertex ? "vertex" : "side";
  j["id"] = l.id;
  if (l.kind == LocusKind::Vertex) j["vertexKind"] = name(l.vertexKind);
  return j;
}

Locus readLocus(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t id = j.at("id").get<std::size_t>();
  if (kind == "side") return Locus::side(id);
  if (kind != "vertex") throw Error(ErrorCode::ParseError, "unknown locus kind " + kind);
  const std::string vk = j.at("vertexKind").get<std::string>();
  if (vk == name(VertexKind::Acute)) return Locus::vertex(id, VertexKind::Acute);
  if (vk == name(VertexKind::Obtuse)) return Locus::vertex(id, VertexKind::Obtuse);
  throw Error(ErrorCode::ParseError, "unknown vertex kind " + vk);
}

template <class F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string decimal(const QSqrt3& s, int digits) { return toDecimal(s, digits); }
std::string decimal(const Real& r, int digits) { return toDecimal(r, digits); }

}  // namespace

std::string csvRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csvField(fields[i]);
  return out + kEol;
}

std::string locusText(const Locus& l) {
  if (l.kind == LocusKind::SideInterior) return "side " + std::to_string(l.id);
  return "vertex " + std::to_string(l.id) + " " + name(l.vertexKind);
}

std::string tableToText(const PrefractalTable& table) {
  std::ostringstream os;
  os << "kochbilliard-table 1\n";
  os << "level " << table.level << "\n";
  os << "vertices " << table.polygon.size() << "\n";
  for (std::size_t i = 0; i < table.polygon.size(); ++i) {
    const ExactVec& v = table.polygon.vertex(i);
    os << v.x.str() << " " << v.y.str() << "\n";
  }
  return os.str();
}

PrefractalTable tableFromText(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tag, key;
  int version = 0;
  if (!(is >> tag >> version) || tag != "kochbilliard-table" || version != 1) {
    throw Error(ErrorCode::ParseError, "not a table file");
  }
  PrefractalTable t;
  std::size_t count = 0;
  if (!(is >> key >> t.level) || key != "level") throw Error(ErrorCode::ParseError, "expected 'level <n>'");
  if (!(is >> key >> count) || key != "vertices") throw Error(ErrorCode::ParseError, "expected 'vertices <count>'");
  std::vector<ExactVec> vs;
  for (std::size_t i = 0; i < count; ++i) {
    std::string x, y;
    if (!(is >> x >> y)) throw Error(ErrorCode::ParseError, "truncated vertex list");
    vs.emplace_back(QSqrt3::parse(x), QSqrt3::parse(y));
  }
  std::string extra;
  if (is >> extra) throw Error(ErrorCode::ParseError, "trailing content after vertex list");
  t.polygon = makeExactPolygon(std::move(vs));
  return t;
}

std::string orbitToJson(const ExactOrbit& o) {
  json j;
  j["format"] = "kochbilliard-orbit";
  j["version"] = 1;
  json init;
  init["basepoint"] = vec(o.initial.basepoint);
  init["direction"] = vec(o.initial.direction);
  if (o.initial.label) {
    if (const auto* a = std::get_if<AngleMultipleOfPi6>(&*o.initial.label)) {
      init["label"] = {{"kind", "pi6"}, {"k", a->k}, {"side", a->side}};
    } else {
      const auto& r = std::get<AngleRadians>(*o.initial.label);
      init["label"] = {{"kind", "radians"}, {"a", r.a}, {"b", r.b}};
    }
  }
  j["initial"] = init;
  j["status"] = name(o.status);
  j["period"] = o.period;
  j["length"] = o.length.str();
  j["vertexId"] = o.vertexId;
  j["maxEvents"] = o.maxEvents;
  j["candidateOnly"] = o.candidateOnly;
  j["toleranceDependent"] = o.toleranceDependent;
  json events = json::array();
  for (const auto& e : o.events) {
    json ej;
    ej["index"] = e.index;
    ej["point"] = vec(e.point);
    ej["locus"] = locusJson(e.locus);
    ej["incoming"] = vec(e.incoming);
    ej["outgoing"] = e.outgoing ? vec(*e.outgoing) : json(nullptr);
    ej["cumulativeLength"] = e.cumulativeLength.str();
    events.push_back(ej);
  }
  j["events"] = events;
  return j.dump(1) + "\n";
}

ExactOrbit orbitFromJson(std::string_view text) {
  return parsing([&] {
    json j = json::parse(text);
    if (j.at("format") != "kochbilliard-orbit" || j.at("version") != 1) {
      throw Error(ErrorCode::ParseError, "not an orbit file");
    }
    ExactOrbit o;
    const json& init = j.at("initial");
    o.initial.basepoint = readVec(init.at("basepoint"));
    o.initial.direction = readVec(init.at("direction"));
    if (init.contains("label")) {
      const json& l = init["label"];
      if (l.at("kind") == "pi6") {
        o.initial.label = AngleMultipleOfPi6{l.at("k").get<long>(), l.at("side").get<std::size_t>()};
      } else {
        o.initial.label = AngleRadians{l.at("a").get<long>(), l.at("b").get<long>()};
      }
    }
    o.status = statusFrom(j.at("status").get<std::string>());
    o.period = j.at("period").get<std::size_t>();
    o.length = QSqrt3::parse(j.at("length").get<std::string>());
    o.vertexId = j.at("vertexId").get<std::size_t>();
    o.maxEvents = j.at("maxEvents").get<std::size_t>();
    o.candidateOnly = j.at("candidateOnly").get<bool>();
    o.toleranceDependent = j.at("toleranceDependent").get<bool>();
    for (const json& ej : j.at("events")) {
      ExactCollisionEvent e;
      e.index = ej.at("index").get<std::size_t>();
      e.point = readVec(ej.at("point"));
      e.locus = readLocus(ej.at("locus"));
      e.incoming = readVec(ej.at("incoming"));
      if (!ej.at("outgoing").is_null()) e.outgoing = readVec(ej["outgoing"]);
      e.cumulativeLength = QSqrt3::parse(ej.at("cumulativeLength").get<std::string>());
      o.events.push_back(e);
    }
    return o;
  });
}

bool sameRecord(const ExactOrbit& a, const ExactOrbit& b) {
  auto sameLabel = [](const std::optional<AngleLabel>& x, const std::optional<AngleLabel>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    if (x->index() != y->index()) return false;
    if (const auto* p = std::get_if<AngleMultipleOfPi6>(&*x)) {
      const auto& q = std::get<AngleMultipleOfPi6>(*y);
      return p->k == q.k && p->side == q.side;
    }
    const auto& p = std::get<AngleRadians>(*x);
    const auto& q = std::get<AngleRadians>(*y);
    return p.a == q.a && p.b == q.b;
  };
  if (a.initial.basepoint != b.initial.basepoint || a.initial.direction != b.initial.direction ||
      !sameLabel(a.initial.label, b.initial.label) || a.status != b.status || a.period != b.period ||
      a.length != b.length || a.vertexId != b.vertexId || a.maxEvents != b.maxEvents ||
      a.candidateOnly != b.candidateOnly || a.toleranceDependent != b.toleranceDependent ||
      a.events.size() != b.events.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.events.size(); ++k) {
    const auto& x = a.events[k];
    const auto& y = b.events[k];
    if (x.index != y.index || x.point != y.point || !(x.locus == y.locus) || x.incoming != y.incoming ||
        x.outgoing.has_value() != y.outgoing.has_value() || (x.outgoing && *x.outgoing != *y.outgoing) ||
        x.cumulativeLength != y.cumulativeLength) {
      return false;
    }
  }
  return true;
}

template <class S>
std::string orbitToCsv(const OrbitRecord<S>& o, int digits) {
  std::string out = std::string("index,x,y,locus,cumulativeLength") + kEol;
  for (const auto& e : o.events) {
    out += std::to_string(e.index) + "," + decimal(e.point.x, digits) + "," + decimal(e.point.y, digits) + "," +
           csvField(locusText(e.locus)) + "," + decimal(e.cumulativeLength, digits) + kEol;
  }
  return out;
}

template std::string orbitToCsv(const OrbitRecord<QSqrt3>&, int);
template std::string orbitToCsv(const OrbitRecord<Real>&, int);

std::string unfoldingToJson(const UnfoldedOrbit& u) {
  json j;
  j["format"] = "kochbilliard-unfolding";
  j["version"] = 1;
  json copies = json::array();
  for (const PlanarIsometry& g : u.copies) copies.push_back({{"linear", mat(g.linear)}, {"translation", vec(g.translation)}});
  j["copies"] = copies;
  j["eventCopy"] = u.eventCopy;
  json pts = json::array();
  for (const ExactVec& p : u.developedPoints) pts.push_back(vec(p));
  j["developedPoints"] = pts;
  j["chord"] = json::array({vec(u.chord.a), vec(u.chord.b)});
  j["chordLength2"] = u.chordLength2().str();
  return j.dump(1) + "\n";
}

std::string surfaceToJson(const FlatSurfaceModel& s) {
  json j;
  j["format"] = "kochbilliard-surface";
  j["version"] = 1;
  json angles = json::array();
  for (const RationalAngle& a : s.spec.angles) angles.push_back(json::array({a.m, a.n}));
  j["angles"] = angles;
  j["N"] = s.spec.N;
  json copies = json::array();
  for (std::size_t c = 0; c < s.copies.size(); ++c) {
    json cj = {{"k", s.copies[c].k}, {"s", s.copies[c].s}};
    if (c < s.copyMatrices.size()) cj["linear"] = mat(s.copyMatrices[c]);
    copies.push_back(cj);
  }
  j["copies"] = copies;
  json ids = json::array();
  for (const auto& [a, b] : s.identifications) {
    ids.push_back(json::array({json::array({a.copy, a.side}), json::array({b.copy, b.side})}));
  }
  j["identifications"] = ids;
  json cones = json::array();
  for (const ConePoint& c : s.conePoints) {
    cones.push_back({{"vertex", c.sourceVertex}, {"m", c.m}, {"removable", c.removable}, {"multiplicity", c.multiplicity}});
  }
  j["conePoints"] = cones;
  j["vertices"] = s.vertexCount;
  j["edges"] = s.edgeCount;
  j["faces"] = s.faceCount;
  j["eulerCharacteristic"] = s.eulerCharacteristic;
  j["genus"] = s.genus;
  return j.dump(1) + "\n";
}

std::string taxonomyCsv(const std::vector<TaxonomyRow>& rows, int digits) {
  std::string out = std::string("level,sideId,class,status,period,length") + kEol;
  for (const TaxonomyRow& r : rows) {
    out += std::to_string(r.level) + "," + std::to_string(r.side) + "," + name(r.label) + "," + name(r.status) + "," +
           std::to_string(r.period) + "," + toDecimal(r.length, digits) + kEol;
  }
  return out;
}

std::string certificateCsv(const ShadowingCertificate& cert, const std::vector<LibraryOrbit>& library) {
  std::string out = std::string("interval,t0,t1,orbit,offset,achieved") + kEol;
  for (std::size_t i = 0; i < cert.intervals.size(); ++i) {
    const ShadowingInterval& iv = cert.intervals[i];
    out += std::to_string(i) + "," + fmtDouble(iv.t0) + "," + fmtDouble(iv.t1) + "," + csvField(library.at(iv.orbit).id) +
           "," + fmtDouble(iv.offset) + "," + fmtDouble(iv.achieved) + kEol;
  }
  return out;
}

}  // namespace kb
