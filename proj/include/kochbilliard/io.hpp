#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kochbilliard/quasiperiodic.hpp"
#include "kochbilliard/surface.hpp"
#include "kochbilliard/taxonomy.hpp"
#include "kochbilliard/unfolding.hpp"

namespace kb {

inline constexpr int kDecimalDigits = 40;

/// Plain text table:
///   kochbilliard-table 1
///   level <n>
///   vertices <count>
///   <x> <y>            one line per vertex, exact "a/b+c/d√3" scalars
std::string tableToText(const PrefractalTable& table);
PrefractalTable tableFromText(std::string_view text);

/// Exact orbit file (JSON, every scalar a string in exact form). Reading it
/// back gives an identical record.
std::string orbitToJson(const ExactOrbit& orbit);
ExactOrbit orbitFromJson(std::string_view text);

bool sameRecord(const ExactOrbit& a, const ExactOrbit& b);

/// One event per row: index, x, y, locus, cumulativeLength (decimal).
template <class S>
std::string orbitToCsv(const OrbitRecord<S>& orbit, int digits = kDecimalDigits);

std::string unfoldingToJson(const UnfoldedOrbit& u);
std::string surfaceToJson(const FlatSurfaceModel& s);

struct TaxonomyRow {
  int level = 0;
  std::size_t side = 0;
  OrbitClass label = OrbitClass::Gamma;
  OrbitStatus status = OrbitStatus::Exhausted;
  std::size_t period = 0;
  QSqrt3 length;
};

std::string taxonomyCsv(const std::vector<TaxonomyRow>& rows, int digits = kDecimalDigits);
std::string certificateCsv(const ShadowingCertificate& cert, const std::vector<LibraryOrbit>& library);

std::string locusText(const Locus& l);

/// RFC 4180 row with CRLF ending; fields are quoted only when needed.
std::string csvRow(const std::vector<std::string>& fields);

}  // namespace kb
