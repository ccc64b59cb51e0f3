#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace critline {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Sign selector for the two target functions 1 + c_s and 1 - c_s.
enum class EtaSign : int { plus = +1, minus = -1 };

inline int eta_value(EtaSign e) { return static_cast<int>(e); }
inline double eta_d(EtaSign e) { return static_cast<double>(static_cast<int>(e)); }
inline const char* eta_name(EtaSign e) { return e == EtaSign::plus ? "plus" : "minus"; }

enum class ErrKind {
  pole,             // evaluation at (or too close to) a pole
  accuracy,         // a computable error bound exceeded its budget
  sign_condition,   // eta * residue < 0 at an abstract point
  indeterminate,    // simultaneous vanishing of h(s) and h(1-s)
  isolation,        // contour encloses more than the intended singularity
  boundary,         // zero or pole sits on a contour being walked
  non_convergence,  // iteration/refinement cap hit
  depth_exhausted,  // subdivision reached minimum cell size
  bracket_failure,  // secular root bracketing failed
  degenerate,       // structurally empty problem (e.g. theta identically 0)
  domain,           // argument outside the supported domain
  config,           // malformed run configuration
  missing_artifact, // report aggregation found no inputs
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what, cplx at = {0.0, 0.0})
      : std::runtime_error(what), kind(kind), at(at) {}
  ErrKind kind;
  cplx at;
};

struct Rect {
  double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;

  double width() const { return re_hi - re_lo; }
  double height() const { return im_hi - im_lo; }
  cplx center() const { return {0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi)}; }
  double diameter() const {
    double w = width(), h = height();
    return std::sqrt(w * w + h * h);
  }
  bool contains(cplx z, double pad = 0.0) const {
    return z.real() >= re_lo - pad && z.real() <= re_hi + pad &&
           z.imag() >= im_lo - pad && z.imag() <= im_hi + pad;
  }
  bool degenerate() const { return !(re_hi > re_lo) || !(im_hi > im_lo); }
};

struct Interval {
  double lo = 0, hi = 0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

}  // namespace critline
