#pragma once

#include "modealg.h"
#include "report.h"

// Triangular decomposition of the generating matrices into diagonal and
// unipotent one-sided series, the difference currents built from them, and
// the bounded-window verification of their exchange identities.  Modes of a
// series are algebra elements; the central dressing enters as coefficient
// powers of g1, never as a letter.

namespace qrll {

// One-variable series over the mode algebra: coefficient of z^k for k in
// [lo, hi].  A hard edge means the series is genuinely zero beyond it (the
// support boundary); a soft edge is just the truncation.  mode() returns
// zero past a hard edge and refuses to answer past a soft one.
struct Current {
  std::map<int, Elem> c;
  int lo = 0, hi = -1;
  bool lo_hard = true, hi_hard = false;

  const Elem& mode(int k) const;
  bool complete(int k) const { return k >= lo && k <= hi; }
  // complete, or past a hard edge (so the mode is exactly zero)
  bool available(int k) const;

  // f(z) -> f(z*s) for an invertible monomial s: mode k picks up s^k.
  Current arg_scaled(const RatFunc& s) const;
  Current scaled(const RatFunc& s) const;

  // same-variable product/sum; windows shrink to the complete region
  Current operator*(const Current& o) const;
  Current operator+(const Current& o) const;
  Current operator-(const Current& o) const;
};

// s^k with negative k via inversion; s must be a unit (monomial quotient)
RatFunc rat_pow(const RatFunc& s, int k);

// Series inverse around the hard edge at mode 0, given the zero mode's
// two-sided inverse.  The recursion makes a*inv exact row-by-row only up to
// the zero-mode identity, so both product orders remain real checks.
Current series_inverse(const Current& a, const Elem& inv0);

// ---------------------------------------------------------------- currents

// Family index: 0 = plus series (modes 0..N), 1 = minus series (-N..0).
struct GaussData {
  int trunc = 0;
  Current l11[2], l12[2], l21[2], l22[2];
  Current k1[2], k1i[2], e[2], f[2], k2[2], k2i[2];
};

// k1 = l11, e = k1^{-1} l12, f = l21 k1^{-1}, k2 = l22 - l21 l11^{-1} l12;
// the zero mode of k2^{-1} is assembled from the adjoined diagonal inverses.
GaussData gauss_decompose(int trunc);

struct CurrentSet {
  GaussData g;
  // difference currents on the symmetric band, dressing absorbed into
  // coefficients: Xp mode m = g1^{-m} e+_m - g1^{+m} e-_m, and mirrored
  // for Xm over f.
  Current Xp, Xm;
  // argument-shifted transforms: E/F at z*q, K = k1(zq)^{-1} k2(zq),
  // H = k2(zq) k1(z/p)
  Current E, F, K[2], H[2];
  // one-sided transforms: Et[fam] = e-series at z*q*g1^{-:+}, Ft mirrored
  Current Et[2], Ft[2];
};

CurrentSet build_currents(int trunc);

// ------------------------------------------------------------------ checks

// re-multiplying the triangular factors reproduces every l_ij mode
CheckResult check_gauss_reconstruction(const RuleSystem& sys,
                                       const GaussData& gd);
// sum_{a+b=n} k_a (k^{-1})_b = [n==0] and the flipped order, all four
// diagonal series
CheckResult check_series_inverses(const RuleSystem& sys, const GaussData& gd);

// exchange identities among the diagonal series and the difference currents
Report verify_current_relations(const RuleSystem& sys, const CurrentSet& cs,
                                int window);
// the same for the argument-shifted E/F/K/H transforms
Report verify_efkh_relations(const RuleSystem& sys, const CurrentSet& cs,
                             int window);

}  // namespace qrll
