#pragma once

#include <map>
#include <string>

#include "poly.h"

namespace qrll {

// Rational function in canonical form: after cancelling the full monomial and
// polynomial gcd, num is Laurent only where den is free of that symbol, den is
// a true polynomial with positive leading coefficient, zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Int(1)) {}
  RatFunc(Int k) : num_(std::move(k)), den_(Int(1)) {}
  RatFunc(Poly n, Poly d);  // canonicalizes; throws on zero denominator
  explicit RatFunc(const Poly& n) : num_(n), den_(Int(1)) {}
  static RatFunc var(int sym, int exp = 1) {
    return RatFunc(Poly::var(sym, exp));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  RatFunc inv() const;

  Rat eval(const std::array<Rat, kNSym>& at) const;

  std::string str() const;

 private:
  Poly num_, den_;
};

RatFunc parse_ratfunc(const std::string& s);

// Expansion direction of a rational function as a bilateral Laurent series in
// one symbol: around the symbol's origin or around infinity.
enum class Dir { toward_zero, toward_inf };

const char* dir_name(Dir d);

// Window [lo,hi] of Laurent coefficients of f expanded in symbol `sym`,
// coefficients exact rational functions of the remaining symbols.
struct DirectedSeries {
  int sym = SZ;
  Dir dir = Dir::toward_zero;
  int lo = 0, hi = -1;
  std::vector<RatFunc> c;  // c[k - lo]

  const RatFunc& at(int k) const;
};

DirectedSeries expand(const RatFunc& f, int sym, Dir dir, int lo, int hi);

// Coefficientwise difference expand(f,toward_zero) - expand(f,toward_inf):
// the formal-delta content of f on the window.
std::vector<RatFunc> delta_difference(const RatFunc& f, int sym, int lo,
                                      int hi);

}  // namespace qrll
