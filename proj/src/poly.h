#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/misc.hpp>

namespace qrll {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Fixed commuting alphabet. p,q are the deformation parameters, z,w,x spectral
// symbols, u a spare ratio symbol, g1..g3 central dressing symbols (one per
// tensor slot), x1..x4 chain inhomogeneities.
inline constexpr int kNSym = 13;
extern const char* const kSymNames[kNSym];

enum Sym : int { SP = 0, SQ, SZ, SW, SX, SU, SG1, SG2, SG3, SX1, SX2, SX3, SX4 };

int sym_index(const std::string& name);  // -1 if unknown

// Laurent exponent vector.
using Expo = std::array<int16_t, kNSym>;

inline Expo expo_zero() { return Expo{}; }
Expo expo_add(const Expo& a, const Expo& b);
Expo expo_sub(const Expo& a, const Expo& b);
// graded-lex: total degree first, then lexicographic on exponents.
int expo_cmp(const Expo& a, const Expo& b);

struct Term {
  Expo e;
  Int c;
};

// Sparse Laurent polynomial, terms sorted descending by expo_cmp, no zero
// coefficients, no duplicate exponents.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int k) {
    if (k != 0) t_.push_back({expo_zero(), std::move(k)});
  }
  Poly(Int k, const Expo& e) {
    if (k != 0) t_.push_back({e, std::move(k)});
  }
  static Poly from_terms(std::vector<Term> terms);  // sorts + combines
  static Poly var(int sym, int exp = 1);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const;
  const Term& lead() const { return t_.front(); }

  int min_exp(int sym) const;  // 0 for zero poly
  int max_exp(int sym) const;
  bool has_sym(int sym) const { return max_exp(sym) != 0 || min_exp(sym) != 0; }

  Poly shifted(const Expo& by) const;  // multiply by monomial
  Poly swapped(int sa, int sb) const;  // exchange two symbols
  Poly neg() const;
  Int int_content() const;  // nonnegative; 0 for zero poly

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_int(const Int& k) const;
  Poly div_int(const Int& k) const;  // requires exact divisibility

  // Laurent poly evaluated at positive rational point per symbol.
  Rat eval(const std::array<Rat, kNSym>& at) const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Exact division of true polynomials (all exponents >= 0 not required, but
// result must be exact); nullopt if b does not divide a.
std::optional<Poly> divexact(const Poly& a, const Poly& b);

// GCD of true polynomials (min exponent >= 0 in every symbol), normalized to
// positive leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Parsing of the canonical grammar (integer coefficients, '*' products,
// '^' exponents, '+'/'-' sums). Throws std::runtime_error on bad input.
Poly parse_poly(const std::string& s);

}  // namespace qrll
