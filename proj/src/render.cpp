#include "kochbilliard/render.hpp"

#include <sstream>

namespace kb {
namespace {

unsigned bitsFor(int digits) { return static_cast<unsigned>(digits * 3.33) + 64; }

std::string num(const Real& v, int digits) {
  std::string s = toDecimal(v, digits);
  return s == "-0" ? "0" : s;
}

}  // namespace

std::string renderScene(const SvgScene& scene, const RenderOptions& opt) {
  PrecisionScope scope(bitsFor(opt.digits));
  Real minX = 0, maxX = 1, minY = 0, maxY = 1;
  bool first = true;
  for (const SvgPath& p : scene.paths) {
    for (const ApproxVec& v : p.points) {
      if (first) {
        minX = maxX = v.x;
        minY = maxY = v.y;
        first = false;
      }
      minX = std::min(minX, v.x);
      maxX = std::max(maxX, v.x);
      minY = std::min(minY, v.y);
      maxY = std::max(maxY, v.y);
    }
  }
  Real extent = std::max(maxX - minX, maxY - minY);
  if (!(extent > 0)) extent = 1;
  const Real pad = extent * Real(opt.margin);
  // the plane's y axis points up; flip it inside the viewBox
  const Real vx = minX - pad, vy = -maxY - pad;
  const Real vw = maxX - minX + 2 * pad, vh = maxY - minY + 2 * pad;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.widthPx << "\" height=\""
     << opt.heightPx << "\" viewBox=\"" << num(vx, opt.digits) << " " << num(vy, opt.digits) << " "
     << num(vw, opt.digits) << " " << num(vh, opt.digits) << "\">\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  for (const SvgPath& p : scene.paths) {
    if (p.points.empty()) continue;
    os << "<path fill=\"" << p.fill << "\" stroke=\"" << p.stroke << "\" stroke-width=\""
       << num(extent * Real(p.width), 12) << "\" stroke-linejoin=\"round\" d=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      os << (i == 0 ? "M" : " L") << num(p.points[i].x, opt.digits) << " " << num(p.points[i].y, opt.digits);
    }
    if (p.closed) os << " Z";
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

SvgPath tablePath(const ExactPolygon& table, const RenderOptions& opt, const std::string& color) {
  PrecisionScope scope(bitsFor(opt.digits));
  SvgPath p;
  for (std::size_t i = 0; i < table.size(); ++i) p.points.push_back(toApprox(table.vertex(i)));
  p.closed = true;
  p.stroke = color;
  p.width = opt.tableStroke;
  return p;
}

template <class S>
SvgPath orbitPath(const OrbitRecord<S>& orbit, const RenderOptions& opt) {
  PrecisionScope scope(bitsFor(opt.digits));
  SvgPath p;
  p.stroke = opt.orbitColor;
  p.width = opt.orbitStroke;
  if (orbit.events.empty()) return p;
  p.points.push_back(toApprox(orbit.initial.basepoint));
  for (const auto& e : orbit.events) p.points.push_back(toApprox(e.point));
  if (orbit.status == OrbitStatus::Periodic && !(orbit.events.back().point == orbit.initial.basepoint)) {
    p.points.push_back(toApprox(orbit.initial.basepoint));
  }
  return p;
}

std::string renderTable(const ExactPolygon& table, const RenderOptions& opt) {
  return renderScene({{tablePath(table, opt, opt.tableColor)}}, opt);
}

template <class S>
std::string renderOrbit(const ExactPolygon& table, const OrbitRecord<S>& orbit, const RenderOptions& opt) {
  SvgScene s{{tablePath(table, opt, opt.tableColor)}};
  SvgPath o = orbitPath(orbit, opt);
  if (!o.points.empty()) s.paths.push_back(std::move(o));
  return renderScene(s, opt);
}

std::string renderUnfolding(const ExactPolygon& table, const UnfoldedOrbit& u, const RenderOptions& opt) {
  PrecisionScope scope(bitsFor(opt.digits));
  SvgScene s;
  for (const PlanarIsometry& g : u.copies) {
    SvgPath p;
    for (std::size_t i = 0; i < table.size(); ++i) p.points.push_back(toApprox(g.apply(table.vertex(i))));
    p.closed = true;
    p.stroke = opt.tableColor;
    p.width = opt.tableStroke;
    s.paths.push_back(std::move(p));
  }
  SvgPath chord;
  for (const ExactVec& v : u.developedPoints) chord.points.push_back(toApprox(v));
  chord.stroke = opt.orbitColor;
  chord.width = opt.orbitStroke;
  s.paths.push_back(std::move(chord));
  return renderScene(s, opt);
}

std::string renderGeneralizedPolygon(const FlatSurfaceModel& surface, const RenderOptions& opt) {
  if (!surface.polygon) throw Error(ErrorCode::InvalidArgument, "surface has no exact polygon");
  const ExactPolygon& poly = *surface.polygon;
  std::size_t pivot = poly.size();
  for (std::size_t v = 0; v < poly.size(); ++v) {
    if (poly.angle(v).m == 1 && poly.angle(v).n == surface.spec.N) {
      pivot = v;
      break;
    }
  }
  if (pivot == poly.size()) throw Error(ErrorCode::InvalidArgument, "no vertex of angle pi/N");
  PrecisionScope scope(bitsFor(opt.digits));
  const ExactVec& c = poly.vertex(pivot);
  SvgScene s;
  for (const Mat2& m : surface.copyMatrices) {
    SvgPath p;
    for (std::size_t i = 0; i < poly.size(); ++i) p.points.push_back(toApprox(c + m * (poly.vertex(i) - c)));
    p.closed = true;
    p.stroke = opt.tableColor;
    p.width = opt.tableStroke;
    s.paths.push_back(std::move(p));
  }
  return renderScene(s, opt);
}

template SvgPath orbitPath(const OrbitRecord<QSqrt3>&, const RenderOptions&);
template SvgPath orbitPath(const OrbitRecord<Real>&, const RenderOptions&);
template std::string renderOrbit(const ExactPolygon&, const OrbitRecord<QSqrt3>&, const RenderOptions&);
template std::string renderOrbit(const ExactPolygon&, const OrbitRecord<Real>&, const RenderOptions&);

}  // namespace kb
