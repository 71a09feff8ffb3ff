#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kochbilliard/billiard.hpp"
#include "kochbilliard/snowflake.hpp"

namespace kb {

struct ContinuedFractionApprox {
  Real theta;
  std::vector<Rational> terms;  // partial quotients
  std::vector<Rational> convergents;
};

/// First `count` convergents of theta > 0. Needs at least 64 + 16 * count
/// bits of precision in theta (PrecisionExhausted otherwise).
ContinuedFractionApprox cfConvergents(const Real& theta, std::size_t count);
/// Exact version; stops early when the expansion terminates.
ContinuedFractionApprox cfConvergents(const Rational& theta, std::size_t count);

/// A periodic orbit of the library, with a name for reports.
struct LibraryOrbit {
  std::string id;
  ExactOrbit orbit;
};

struct ShadowingInterval {
  double t0 = 0, t1 = 0;
  std::size_t orbit = 0;  // index into the library
  double offset = 0;      // p is read at t + offset
  double achieved = 0;    // sup of the sampled distances
};

/// Sampled statement: on every sample time of each interval, q(t) is within
/// epsilon of the matched periodic orbit. No continuous-time claim.
struct ShadowingCertificate {
  double horizon = 0;
  double epsilon = 0;
  double sampleStep = 0;
  std::vector<ShadowingInterval> intervals;
};

struct ShadowingOptions {
  std::size_t samples = 4096;        // sample step = T / samples
  std::size_t offsetGrid = 256;      // dense offsets per library orbit
  bool zeroOffsets = false;          // equal-time matching only
};

/// Greedy left-to-right search. q must reach time T unless it is periodic.
std::optional<ShadowingCertificate> shadowingDecompose(const ApproxOrbit& q, const std::vector<LibraryOrbit>& library,
                                                       double epsilon, double T, const ShadowingOptions& opt = {});

/// Re-samples every interval and confirms the bound and the recorded sup.
bool checkCertificate(const ApproxOrbit& q, const std::vector<LibraryOrbit>& library, const ShadowingCertificate& cert);

struct MinimalEpsilon {
  double epsilon = 0;  // smallest certified value found
  ShadowingCertificate certificate;
};

/// Bisection on log(epsilon) between lo and hi; nullopt if hi does not certify.
std::optional<MinimalEpsilon> minimalEpsilon(const ApproxOrbit& q, const std::vector<LibraryOrbit>& library, double T,
                                             const ShadowingOptions& opt = {}, double lo = 1e-13, double hi = 2.0,
                                             int iterations = 50);

/// Approximate-kernel counterpart of induceCondition: keeps a boundary
/// basepoint with an inward direction, otherwise slides back along the line.
InitialCondition<Real> induceApprox(const ApproxPolygon& table, const ApproxVec& basepoint, const ApproxVec& direction);

/// Orbit of KS_n from the line through `basepoint` at angle `angle` radians,
/// slid back to the boundary as for induced conditions, simulated in the
/// approximate kernel at the current precision until its length reaches T.
ApproxOrbit quasiOrbit(const PrefractalTable& table, const ExactVec& basepoint, const Rational& angle, double T);

/// Distinct gamma_n paths plus ppF_n.
std::vector<LibraryOrbit> gammaLibrary(const PrefractalTable& table, std::size_t maxEvents);

struct StabilityLevel {
  int level = 0;
  OrbitStatus quasiStatus = OrbitStatus::Exhausted;
  OrbitStatus periodicStatus = OrbitStatus::Exhausted;
  std::optional<ShadowingCertificate> certificate;
};

struct StabilityReport {
  std::vector<StabilityLevel> levels;
  bool stable = false;
  bool partitionsDiffer = false;  // partition of [0, T] changes with n
};

/// For each n, q_n and p_n are induced from their sources; stable iff q_n is
/// shadowed by p_n alone at every level.
StabilityReport stabilityCheck(const ExactVec& quasiBasepoint, const Rational& quasiAngle,
                               const InitialCondition<QSqrt3>& periodicSource, int nMax, double epsilon, double T,
                               const ShadowingOptions& opt = {});

/// Apex retroreflection on the triangle: launches at pi/2 from (1/2 + 3^-k, 0)
/// against the corner-continued orbit from (1/2, 0); sup of the sampled
/// distance over the time after the corner event until the return to the
/// base. Computed at 200 bits.
std::vector<Real> cornerLimitDeviations(int kMin, int kMax, std::size_t samples = 256);

}  // namespace kb
