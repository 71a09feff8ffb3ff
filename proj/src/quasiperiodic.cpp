#include "kochbilliard/quasiperiodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <mpfr.h>

#include "kochbilliard/taxonomy.hpp"

namespace kb {
namespace {

// Unit-speed polyline of an orbit; periodic tracks wrap around.
template <class T>
struct Track {
  std::vector<T> x, y, cum;
  T period = 0;  // zero when not periodic

  void add(const T& px, const T& py, const T& c) {
    x.push_back(px);
    y.push_back(py);
    cum.push_back(c);
  }
  T end() const { return cum.back(); }

  std::pair<T, T> at(T t) const {
    if (period > 0) {
      t = t - floorT(t / period) * period;
    }
    if (t <= cum.front()) return {x.front(), y.front()};
    if (t >= cum.back()) return {x.back(), y.back()};
    std::size_t i = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), t) - cum.begin()) - 1;
    T len = cum[i + 1] - cum[i];
    if (!(len > 0)) return {x[i], y[i]};
    T s = (t - cum[i]) / len;
    return {x[i] + s * (x[i + 1] - x[i]), y[i] + s * (y[i + 1] - y[i])};
  }

  static T floorT(const T& v) {
    using std::floor;
    using boost::multiprecision::floor;
    return T(floor(v));
  }
};

template <class T>
T convert(const QSqrt3& s) {
  if constexpr (std::is_same_v<T, double>) {
    return s.toDouble();
  } else {
    return s.toReal();
  }
}

template <class T>
T convert(const Real& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.convert_to<double>();
  } else {
    return r;
  }
}

template <class T, class S>
Track<T> makeTrack(const OrbitRecord<S>& o) {
  Track<T> tr;
  tr.add(convert<T>(o.initial.basepoint.x), convert<T>(o.initial.basepoint.y), T(0));
  for (const auto& e : o.events) tr.add(convert<T>(e.point.x), convert<T>(e.point.y), convert<T>(e.cumulativeLength));
  if (o.status == OrbitStatus::Periodic) {
    T len = convert<T>(o.length);
    if (tr.cum.back() < len) tr.add(tr.x.front(), tr.y.front(), len);
    tr.period = len;
  }
  return tr;
}

double dist(const std::pair<double, double>& a, const std::pair<double, double>& b) {
  return std::hypot(a.first - b.first, a.second - b.second);
}

std::vector<Track<double>> libraryTracks(const std::vector<LibraryOrbit>& library) {
  std::vector<Track<double>> out;
  for (const LibraryOrbit& l : library) {
    if (l.orbit.status != OrbitStatus::Periodic) {
      throw Error(ErrorCode::InvalidArgument, "library orbit " + l.id + " is not periodic");
    }
    out.push_back(makeTrack<double>(l.orbit));
  }
  return out;
}

// Offsets that put p near q(t) at time t: a dense grid plus the projections
// of q(t) onto each leg of p that come within epsilon.
std::vector<double> candidateOffsets(const Track<double>& p, std::pair<double, double> q, double t, double epsilon,
                                     std::size_t grid) {
  std::vector<double> out;
  for (std::size_t m = 0; m < grid; ++m) out.push_back(p.period * static_cast<double>(m) / static_cast<double>(grid) - t);
  for (std::size_t i = 0; i + 1 < p.x.size(); ++i) {
    double ex = p.x[i + 1] - p.x[i], ey = p.y[i + 1] - p.y[i];
    double len2 = ex * ex + ey * ey;
    if (len2 == 0) continue;
    double s = std::clamp(((q.first - p.x[i]) * ex + (q.second - p.y[i]) * ey) / len2, 0.0, 1.0);
    if (std::hypot(p.x[i] + s * ex - q.first, p.y[i] + s * ey - q.second) < epsilon) {
      out.push_back(p.cum[i] + s * (p.cum[i + 1] - p.cum[i]) - t);
    }
  }
  return out;
}

}  // namespace

ContinuedFractionApprox cfConvergents(const Rational& theta, std::size_t count) {
  if (sign(theta) <= 0) throw Error(ErrorCode::InvalidArgument, "continued fraction of a non-positive angle");
  ContinuedFractionApprox cf;
  cf.theta = QSqrt3(theta).toReal();
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  Rational x = theta;
  while (cf.convergents.size() < count) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_class h = a * h1 + h2, k = a * k1 + k2;
    h2 = h1, h1 = h, k2 = k1, k1 = k;
    cf.terms.emplace_back(a);
    cf.convergents.emplace_back(h, k);
    cf.convergents.back().canonicalize();
    Rational frac = x - Rational(a);
    if (sign(frac) == 0) break;
    x = 1 / frac;
  }
  return cf;
}

ContinuedFractionApprox cfConvergents(const Real& theta, std::size_t count) {
  const long bits = static_cast<long>(mpfr_get_prec(theta.backend().data()));
  if (bits < 64 + 16 * static_cast<long>(count)) {
    throw Error(ErrorCode::PrecisionExhausted, std::to_string(count) + " convergents need " +
                                                   std::to_string(64 + 16 * count) + " bits, have " +
                                                   std::to_string(bits));
  }
  if (sign(theta) <= 0) throw Error(ErrorCode::InvalidArgument, "continued fraction of a non-positive angle");
  // the mpfr value is an exact dyadic rational
  Rational r;
  mpfr_get_q(r.get_mpq_t(), theta.backend().data());
  ContinuedFractionApprox cf = cfConvergents(r, count);
  cf.theta = theta;
  return cf;
}

std::optional<ShadowingCertificate> shadowingDecompose(const ApproxOrbit& q, const std::vector<LibraryOrbit>& library,
                                                       double epsilon, double T, const ShadowingOptions& opt) {
  if (library.empty()) throw Error(ErrorCode::InvalidArgument, "empty shadowing library");
  if (!(T > 0) || opt.samples == 0) throw Error(ErrorCode::InvalidArgument, "horizon and sample count must be positive");
  const Track<double> qt = makeTrack<double>(q);
  if (qt.period == 0 && qt.end() < T * (1 - 1e-12)) return std::nullopt;  // q stops before T
  const std::vector<Track<double>> lib = libraryTracks(library);

  const std::size_t n = opt.samples;
  const double h = T / static_cast<double>(n);
  std::vector<std::pair<double, double>> qs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) qs[k] = qt.at(h * static_cast<double>(k));

  ShadowingCertificate cert{T, epsilon, h, {}};
  std::size_t start = 0;
  while (start < n) {
    std::size_t bestEnd = start;
    ShadowingInterval best;
    bool any = false;
    const double ts = h * static_cast<double>(start);
    for (std::size_t j = 0; j < lib.size(); ++j) {
      std::vector<double> offsets =
          opt.zeroOffsets ? std::vector<double>{0.0} : candidateOffsets(lib[j], qs[start], ts, epsilon, opt.offsetGrid);
      for (double off : offsets) {
        double d = dist(qs[start], lib[j].at(ts + off));
        if (!(d < epsilon)) continue;
        any = true;
        double sup = d;
        std::size_t k = start;
        while (k < n) {
          double dk = dist(qs[k + 1], lib[j].at(h * static_cast<double>(k + 1) + off));
          if (!(dk < epsilon)) break;
          sup = std::max(sup, dk);
          ++k;
        }
        if (k > bestEnd) {
          bestEnd = k;
          best = {ts, h * static_cast<double>(k), j, off, sup};
        }
      }
    }
    if (!any || bestEnd == start) return std::nullopt;
    cert.intervals.push_back(best);
    start = bestEnd;
  }
  return cert;
}

bool checkCertificate(const ApproxOrbit& q, const std::vector<LibraryOrbit>& library, const ShadowingCertificate& cert) {
  if (cert.intervals.empty() || !(cert.sampleStep > 0)) return false;
  const Track<double> qt = makeTrack<double>(q);
  const std::vector<Track<double>> lib = libraryTracks(library);
  const double h = cert.sampleStep;
  double expectedStart = 0;
  for (const ShadowingInterval& iv : cert.intervals) {
    if (iv.orbit >= lib.size() || std::abs(iv.t0 - expectedStart) > h * 1e-9 || !(iv.t1 > iv.t0)) return false;
    if (!(iv.achieved < cert.epsilon)) return false;
    const long k0 = std::lround(iv.t0 / h), k1 = std::lround(iv.t1 / h);
    double sup = 0;
    for (long k = k0; k <= k1; ++k) {
      double t = h * static_cast<double>(k);
      sup = std::max(sup, dist(qt.at(t), lib[iv.orbit].at(t + iv.offset)));
    }
    if (!(sup < cert.epsilon) || std::abs(sup - iv.achieved) > 1e-12) return false;
    expectedStart = iv.t1;
  }
  return std::abs(expectedStart - cert.horizon) <= h * 1e-9;
}

std::optional<MinimalEpsilon> minimalEpsilon(const ApproxOrbit& q, const std::vector<LibraryOrbit>& library, double T,
                                             const ShadowingOptions& opt, double lo, double hi, int iterations) {
  std::optional<ShadowingCertificate> top = shadowingDecompose(q, library, hi, T, opt);
  if (!top) return std::nullopt;
  MinimalEpsilon best{hi, *top};
  if (auto bottom = shadowingDecompose(q, library, lo, T, opt)) return MinimalEpsilon{lo, *bottom};
  for (int i = 0; i < iterations; ++i) {
    double mid = std::sqrt(lo * hi);
    if (auto c = shadowingDecompose(q, library, mid, T, opt)) {
      hi = mid;
      best = {mid, *c};
    } else {
      lo = mid;
    }
  }
  return best;
}

InitialCondition<Real> induceApprox(const ApproxPolygon& table, const ApproxVec& basepoint, const ApproxVec& direction) {
  std::optional<Locus> on;
  try {
    on = classifyBasepoint(table, basepoint);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::LineMissesTable, "basepoint lies outside the table");
  }
  if (on && pointsInward(table, *on, direction)) return {basepoint, direction, {}};
  if (on && !pointsInward(table, *on, -direction)) {
    throw Error(ErrorCode::LineMissesTable, "the line only grazes the boundary at the basepoint");
  }
  CollisionEvent<Real> back = step(table, PhaseState<Real>{basepoint, -direction, on});
  return {back.point, direction, {}};
}

ApproxOrbit quasiOrbit(const PrefractalTable& table, const ExactVec& basepoint, const Rational& angle, double T) {
  const ApproxPolygon poly = toApprox(table.polygon);
  Real th = QSqrt3(angle).toReal();
  ApproxVec d(boost::multiprecision::cos(th), boost::multiprecision::sin(th));
  InitialCondition<Real> ic = induceApprox(poly, toApprox(basepoint), d);
  ic.label = AngleRadians{angle.get_num().get_si(), angle.get_den().get_si()};
  for (std::size_t budget = 64;; budget *= 2) {
    ApproxOrbit o = simulate(poly, ic, budget);
    if (o.status != OrbitStatus::Exhausted || o.length.convert_to<double>() >= T || budget >= (std::size_t{1} << 22)) {
      return o;
    }
  }
}

std::vector<LibraryOrbit> gammaLibrary(const PrefractalTable& table, std::size_t maxEvents) {
  std::vector<LibraryOrbit> lib;
  GammaEnumeration g = enumerateGamma(table, maxEvents);
  const std::string level = std::to_string(table.level);
  for (std::size_t rep : g.representatives) {
    if (g.orbits[rep].status != OrbitStatus::Periodic) continue;
    lib.push_back({"gamma_" + level + " side " + std::to_string(rep), g.orbits[rep]});
  }
  lib.push_back({"ppF_" + level, ppfBySimulation(table.level, maxEvents)});
  return lib;
}

StabilityReport stabilityCheck(const ExactVec& quasiBasepoint, const Rational& quasiAngle,
                               const InitialCondition<QSqrt3>& periodicSource, int nMax, double epsilon, double T,
                               const ShadowingOptions& opt) {
  StabilityReport rep;
  rep.stable = true;
  std::optional<std::vector<double>> firstCuts;
  for (int n = 0; n <= nMax; ++n) {
    PrefractalTable t = buildKS(n);
    StabilityLevel lvl;
    lvl.level = n;
    ApproxOrbit q = quasiOrbit(t, quasiBasepoint, quasiAngle, T);
    lvl.quasiStatus = q.status;
    ExactOrbit p = simulate(t.polygon, induceCondition(t, periodicSource).condition, 1u << 16);
    lvl.periodicStatus = p.status;
    if (p.status == OrbitStatus::Periodic) {
      lvl.certificate = shadowingDecompose(q, {{"p_" + std::to_string(n), p}}, epsilon, T, opt);
    }
    if (lvl.certificate) {
      std::vector<double> cuts;
      for (const auto& iv : lvl.certificate->intervals) cuts.push_back(iv.t1);
      if (!firstCuts) {
        firstCuts = cuts;
      } else if (cuts != *firstCuts) {
        rep.partitionsDiffer = true;
      }
    }
    rep.stable = rep.stable && lvl.certificate.has_value();
    rep.levels.push_back(std::move(lvl));
  }
  return rep;
}

std::vector<Real> cornerLimitDeviations(int kMin, int kMax, std::size_t samples) {
  PrecisionScope scope(200);
  const ExactVec base(QSqrt3(Rational(1, 2)), QSqrt3(0));
  ExactOrbit ref = simulate(unitTriangle(), InitialCondition<QSqrt3>{base, unitDirection(3), {}}, 4);
  if (ref.status != OrbitStatus::Periodic || ref.events.front().locus.kind != LocusKind::Vertex) {
    throw Error(ErrorCode::InternalConsistency, "reference orbit does not retroreflect at the apex");
  }
  const Track<Real> rt = makeTrack<Real>(ref);
  const Real tCorner = ref.events.front().cumulativeLength.toReal();
  const Real tEnd = ref.length.toReal();
  const ApproxPolygon tri = toApprox(unitTriangle());
  std::vector<Real> out;
  for (int k = kMin; k <= kMax; ++k) {
    Real delta = boost::multiprecision::pow(Real(3), -k);
    ApproxVec x0(Real(0.5) + delta, Real(0));
    ApproxOrbit o = simulate(tri, InitialCondition<Real>{x0, ApproxVec(Real(0), Real(1)), {}}, 16);
    Track<Real> ot = makeTrack<Real>(o);
    if (ot.end() < tEnd) throw Error(ErrorCode::InternalConsistency, "perturbed orbit stops early");
    Real sup = 0;
    for (std::size_t s = 0; s <= samples; ++s) {
      Real t = tCorner + (tEnd - tCorner) * Real(s) / Real(samples);
      auto [ax, ay] = ot.at(t);
      auto [bx, by] = rt.at(t);
      sup = std::max(sup, Real(boost::multiprecision::sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by))));
    }
    out.push_back(sup);
  }
  return out;
}

}  // namespace kb
