#pragma once

#include "tutte/synthesis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tutte {

/// Planar complexity status of one point (x, y).
struct PointClass {
  Rational x, y, q;
  bool fp_easy = false;
  std::string exact_status;   // "FP-easy" or "#P-hard"
  std::string approx_status;  // "exact-easy", "no-FPRAS(<region>)" or "open"
  std::string region;         // negQ-q>5, x>1&y<-1, y>1&x<-1, q=3-branch; empty otherwise
  std::string citation;
  std::optional<ShiftCertificate> certificate;

  bool no_fpras() const { return !region.empty(); }
};

/// Exact classification. With want_certificate, a shift certificate is attached
/// whenever one can be built (no-FPRAS points with q outside [0,5]).
PointClass classify_point(const Rational& x, const Rational& y, bool want_certificate = true);

/// Rebuilds every gadget, recomputes its effective weight and checks the three ranges
/// and the single base weight. Empty string when the certificate holds.
std::string check_certificate(const ShiftCertificate& c);

struct MapRecord {
  Rational x, y, q;
  PointClass cls;
};

/// Lattice scan, y outer, x inner, both ascending from the lower bound by step.
std::vector<MapRecord> map_region(const Rational& xmin, const Rational& xmax, const Rational& ymin,
                                  const Rational& ymax, const Rational& step, bool certificates = false);

/// x, y, q, exact_status, approx_status, citation separated by tabs.
std::string record_line(const MapRecord& r);

}  // namespace tutte
