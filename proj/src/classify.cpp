#include "tutte/classify.hpp"

namespace tutte {

PointClass classify_point(const Rational& x, const Rational& y, bool want_certificate) {
  PointClass c;
  c.x = x;
  c.y = y;
  c.q = (x - 1) * (y - 1);
  const Rational& q = c.q;
  const bool special = (x == 1 && y == 1) || (x == -1 && y == -1);
  c.fp_easy = q == 1 || q == 2 || special;
  c.exact_status = c.fp_easy ? "FP-easy" : "#P-hard";
  if (c.fp_easy) {
    c.approx_status = "exact-easy";
    if (q == 1) {
      c.citation = "Vertigan: polynomial time on H1 (planar)";
    } else if (q == 2) {
      c.citation = "Vertigan: polynomial time on H2 (planar Ising)";
    } else {
      c.citation = "Jaeger-Vertigan-Welsh: special point";
    }
    return c;
  }
  if (x < 0 && y < 0 && q > 5) {
    c.region = "negQ-q>5";
    c.citation = "Goldberg-Jerrum: no FPRAS for x<0, y<0, q>5 (planar)";
  } else if (x > 1 && y < -1) {
    c.region = "x>1&y<-1";
    c.citation = "Goldberg-Jerrum: no FPRAS for x>1, y<-1 (planar)";
  } else if (y > 1 && x < -1) {
    c.region = "y>1&x<-1";
    c.citation = "Goldberg-Jerrum: no FPRAS for y>1, x<-1 (planar, by duality)";
  } else if (q == 3 && x < 1 && y < 1) {
    c.region = "q=3-branch";
    c.citation = "Goldberg-Jerrum: no FPRAS on (x-1)(y-1)=3, x,y<1 (planar 3-colouring)";
  }
  if (c.region.empty()) {
    c.approx_status = "open";
    c.citation = y == 0 ? "open: planar colourings at y=0" : "open: not settled for planar graphs";
    return c;
  }
  c.approx_status = "no-FPRAS(" + c.region + ")";
  if (want_certificate && (q < 0 || q > 5)) c.certificate = shift_certificate(x, y);
  return c;
}

std::string check_certificate(const ShiftCertificate& c) {
  const Rational py = c.dual ? c.x : c.y;
  if (c.q != (c.x - 1) * (c.y - 1)) return "q does not match the point";
  const Rational base = py - 1;
  const Implementation* parts[3] = {&c.first, &c.second, &c.third};
  for (int i = 0; i < 3; ++i) {
    const Implementation& impl = *parts[i];
    if (impl.q != c.q) return "gadget " + std::to_string(i + 1) + " built for another q";
    TwoTerminalGadget g = impl.gadget.materialize();
    for (const Rational& w : g.graph.weights()) {
      if (w != base) return "gadget " + std::to_string(i + 1) + " uses weight " + to_string(w);
    }
    WeightScale ws = effective_weight(g, c.q);
    if (ws.weight != impl.effective_weight || ws.scale != impl.scale) {
      return "gadget " + std::to_string(i + 1) + " effective weight does not recompute";
    }
  }
  if (abs(c.first.y()) <= 1) return "first point has |y| <= 1";
  if (!(c.second.y() > -1 && c.second.y() < 1)) return "second point outside (-1,1)";
  if (c.third.y() >= 0) return "third point has y >= 0";
  return "";
}

std::vector<MapRecord> map_region(const Rational& xmin, const Rational& xmax, const Rational& ymin,
                                  const Rational& ymax, const Rational& step, bool certificates) {
  if (step <= 0) throw Error("step must be positive");
  if (xmax < xmin || ymax < ymin) throw Error("empty range");
  std::vector<MapRecord> out;
  for (Rational y = ymin; y <= ymax; y += step) {
    for (Rational x = xmin; x <= xmax; x += step) {
      MapRecord r{x, y, (x - 1) * (y - 1), classify_point(x, y, certificates)};
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string record_line(const MapRecord& r) {
  return to_string(r.x) + "\t" + to_string(r.y) + "\t" + to_string(r.q) + "\t" + r.cls.exact_status + "\t" +
         r.cls.approx_status + "\t" + r.cls.citation;
}

}  // namespace tutte
