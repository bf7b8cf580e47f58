#include "ratfunc.h"

#include <cctype>
#include <iterator>
#include <stdexcept>

namespace qrll {

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::runtime_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Int(1));
    return;
  }
  // align monomial content: per symbol cancel the smaller min-exponent
  Expo sh = expo_zero();
  for (int s = 0; s < kNSym; ++s)
    sh[s] = static_cast<int16_t>(-std::min(num_.min_exp(s), den_.min_exp(s)));
  num_ = num_.shifted(sh);
  den_ = den_.shifted(sh);
  Int ig = boost::multiprecision::gcd(num_.int_content(), den_.int_content());
  if (ig != 1) {
    num_ = num_.div_int(ig);
    den_ = den_.div_int(ig);
  }
  if (!den_.is_one()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divexact(num_, g);
      den_ = *divexact(den_, g);
    }
  }
  if (den_.lead().c < 0) {
    num_ = num_.neg();
    den_ = den_.neg();
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  Poly g = poly_gcd(a.den_, b.den_);
  if (g.is_one())
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly db = *divexact(b.den_, g);
  Poly da = *divexact(a.den_, g);
  return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = r.num_.neg();
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::runtime_error("RatFunc: division by zero");
  return RatFunc(den_, num_);
}

Rat RatFunc::eval(const std::array<Rat, kNSym>& at) const {
  Rat d = den_.eval(at);
  if (d == 0) throw std::runtime_error("RatFunc: eval hits pole");
  return num_.eval(at) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc parse_ratfunc(const std::string& s) {
  // "(num)/(den)" with canonical parenthesization, or a bare polynomial
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i < s.size() && s[i] == '(') {
    // find matching ')'
    size_t j = s.find(')', i + 1);
    if (j != std::string::npos) {
      size_t k = j + 1;
      while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
      if (k < s.size() && s[k] == '/') {
        std::string nums = s.substr(i + 1, j - i - 1);
        ++k;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])))
          ++k;
        if (k >= s.size() || s[k] != '(')
          throw std::runtime_error("parse_ratfunc: expected '(' after '/'");
        size_t m = s.find(')', k + 1);
        if (m == std::string::npos)
          throw std::runtime_error("parse_ratfunc: unbalanced ')'");
        std::string dens = s.substr(k + 1, m - k - 1);
        for (size_t r = m + 1; r < s.size(); ++r)
          if (!std::isspace(static_cast<unsigned char>(s[r])))
            throw std::runtime_error("parse_ratfunc: trailing input");
        return RatFunc(parse_poly(nums), parse_poly(dens));
      }
    }
  }
  return RatFunc(parse_poly(s));
}

const char* dir_name(Dir d) {
  return d == Dir::toward_zero ? "toward-zero" : "toward-infinity";
}

const RatFunc& DirectedSeries::at(int k) const {
  static const RatFunc zero;
  if (k < lo || k > hi) return zero;
  return c[static_cast<size_t>(k - lo)];
}

DirectedSeries expand(const RatFunc& f, int sym, Dir dir, int lo, int hi) {
  if (lo > hi) throw std::runtime_error("expand: empty window");
  DirectedSeries out;
  out.sym = sym;
  out.dir = dir;
  out.lo = lo;
  out.hi = hi;
  out.c.assign(static_cast<size_t>(hi - lo + 1), RatFunc());
  if (f.is_zero()) return out;

  // split num/den into coefficient polys per power of sym
  auto split = [&](const Poly& p) {
    std::map<int, Poly> m;
    for (const auto& t : p.terms()) {
      Term u = t;
      int k = u.e[sym];
      u.e[sym] = 0;
      m[k] = m[k] + Poly::from_terms({u});
    }
    return m;
  };
  std::map<int, Poly> N = split(f.num()), D = split(f.den());

  if (dir == Dir::toward_zero) {
    int a = D.begin()->first;  // lowest den power
    RatFunc da_inv = RatFunc(Poly(Int(1)), D.begin()->second);
    int b0 = N.begin()->first - a;  // series starts here
    if (b0 > hi) return out;
    std::map<int, RatFunc> cs;  // computed coefficients
    for (int k = b0; k <= hi; ++k) {
      auto nit = N.find(k + a);
      RatFunc acc = nit != N.end() ? RatFunc(nit->second) : RatFunc();
      for (auto it = std::next(D.begin()); it != D.end(); ++it) {
        int j = it->first - a;
        if (k - j < b0) break;
        auto cit = cs.find(k - j);
        if (cit != cs.end() && !cit->second.is_zero())
          acc -= RatFunc(it->second) * cit->second;
      }
      RatFunc ck = acc * da_inv;
      cs.emplace(k, ck);
      if (k >= lo) out.c[static_cast<size_t>(k - lo)] = std::move(ck);
    }
  } else {
    int A = D.rbegin()->first;  // highest den power
    RatFunc dA_inv = RatFunc(Poly(Int(1)), D.rbegin()->second);
    int t0 = N.rbegin()->first - A;  // series starts here going down
    if (t0 < lo) return out;
    std::map<int, RatFunc> cs;
    for (int k = t0; k >= lo; --k) {
      auto nit = N.find(k + A);
      RatFunc acc = nit != N.end() ? RatFunc(nit->second) : RatFunc();
      for (auto it = std::next(D.rbegin()); it != D.rend(); ++it) {
        int j = A - it->first;
        if (k + j > t0) break;
        auto cit = cs.find(k + j);
        if (cit != cs.end() && !cit->second.is_zero())
          acc -= RatFunc(it->second) * cit->second;
      }
      RatFunc ck = acc * dA_inv;
      cs.emplace(k, ck);
      if (k <= hi) out.c[static_cast<size_t>(k - lo)] = std::move(ck);
    }
  }
  return out;
}

std::vector<RatFunc> delta_difference(const RatFunc& f, int sym, int lo,
                                      int hi) {
  DirectedSeries s0 = expand(f, sym, Dir::toward_zero, lo, hi);
  DirectedSeries si = expand(f, sym, Dir::toward_inf, lo, hi);
  std::vector<RatFunc> out(static_cast<size_t>(hi - lo + 1));
  for (int k = lo; k <= hi; ++k)
    out[static_cast<size_t>(k - lo)] = s0.at(k) - si.at(k);
  return out;
}

}  // namespace qrll
