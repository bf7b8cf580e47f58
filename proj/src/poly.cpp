#include "poly.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace qrll {

const char* const kSymNames[kNSym] = {"p",  "q",  "z",  "w",  "x",  "u", "g1",
                                      "g2", "g3", "x1", "x2", "x3", "x4"};

int sym_index(const std::string& name) {
  for (int i = 0; i < kNSym; ++i)
    if (name == kSymNames[i]) return i;
  return -1;
}

Expo expo_add(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kNSym; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kNSym; ++i) r[i] = static_cast<int16_t>(a[i] - b[i]);
  return r;
}

int expo_cmp(const Expo& a, const Expo& b) {
  int ta = 0, tb = 0;
  for (int i = 0; i < kNSym; ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta < tb ? -1 : 1;
  for (int i = 0; i < kNSym; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return expo_cmp(a.e, b.e) > 0; });
  Poly r;
  for (auto& t : terms) {
    if (t.c == 0) continue;
    if (!r.t_.empty() && expo_cmp(r.t_.back().e, t.e) == 0) {
      r.t_.back().c += t.c;
      if (r.t_.back().c == 0) r.t_.pop_back();
    } else {
      r.t_.push_back(std::move(t));
    }
  }
  return r;
}

Poly Poly::var(int sym, int exp) {
  Expo e = expo_zero();
  e[sym] = static_cast<int16_t>(exp);
  return Poly(Int(1), e);
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_[0].c == 1 && expo_cmp(t_[0].e, expo_zero()) == 0;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && expo_cmp(t_[0].e, expo_zero()) == 0);
}

int Poly::min_exp(int sym) const {
  if (t_.empty()) return 0;
  int m = t_[0].e[sym];
  for (const auto& t : t_) m = std::min<int>(m, t.e[sym]);
  return m;
}

int Poly::max_exp(int sym) const {
  if (t_.empty()) return 0;
  int m = t_[0].e[sym];
  for (const auto& t : t_) m = std::max<int>(m, t.e[sym]);
  return m;
}

Poly Poly::shifted(const Expo& by) const {
  Poly r = *this;
  for (auto& t : r.t_) t.e = expo_add(t.e, by);
  return r;  // order preserved: shifting is monotone for graded-lex
}

Poly Poly::swapped(int sa, int sb) const {
  std::vector<Term> ts = t_;
  for (auto& t : ts) std::swap(t.e[sa], t.e[sb]);
  return Poly::from_terms(std::move(ts));
}

Poly Poly::neg() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Int Poly::int_content() const {
  Int g = 0;
  for (const auto& t : t_) {
    g = boost::multiprecision::gcd(g, t.c);
    if (g == 1) break;
  }
  return g;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    int c = expo_cmp(a.t_[i].e, b.t_[j].e);
    if (c > 0) {
      r.t_.push_back(a.t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Int s = a.t_[i].c + b.t_[j].c;
      if (s != 0) r.t_.push_back({a.t_[i].e, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
  for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.neg(); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_monomial()) return b.shifted(a.t_[0].e).mul_int(a.t_[0].c);
  if (b.is_monomial()) return a.shifted(b.t_[0].e).mul_int(b.t_[0].c);
  std::map<Expo, Int, bool (*)(const Expo&, const Expo&)> acc(
      [](const Expo& x, const Expo& y) { return expo_cmp(x, y) > 0; });
  for (const auto& ta : a.t_)
    for (const auto& tb : b.t_) {
      Expo e = expo_add(ta.e, tb.e);
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, ta.c * tb.c);
      else
        it->second += ta.c * tb.c;
    }
  Poly r;
  r.t_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) r.t_.push_back({e, std::move(c)});
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (expo_cmp(a.t_[i].e, b.t_[i].e) != 0 || a.t_[i].c != b.t_[i].c)
      return false;
  return true;
}

Poly Poly::mul_int(const Int& k) const {
  if (k == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.c *= k;
  return r;
}

Poly Poly::div_int(const Int& k) const {
  Poly r = *this;
  for (auto& t : r.t_) {
    Int q = t.c / k;
    if (q * k != t.c) throw std::runtime_error("div_int: not exact");
    t.c = std::move(q);
  }
  return r;
}

Rat Poly::eval(const std::array<Rat, kNSym>& at) const {
  Rat acc = 0;
  for (const auto& t : t_) {
    Rat v = t.c;
    for (int s = 0; s < kNSym; ++s) {
      int e = t.e[s];
      if (e == 0) continue;
      Rat base = at[s];
      if (e < 0) {
        base = Rat(1) / base;
        e = -e;
      }
      for (int k = 0; k < e; ++k) v *= base;
    }
    acc += v;
  }
  return acc;
}

std::optional<Poly> divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly();
  std::vector<Term> q;
  Poly r = a;
  const Term& lb = b.lead();
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    Int qc = lr.c / lb.c;
    if (qc * lb.c != lr.c) return std::nullopt;
    Expo qe = expo_sub(lr.e, lb.e);
    // graded-lex is multiplication-compatible, so lead(r) must be divisible by
    // lead(b) whenever b | r; a failed step means "not divisible". For true
    // polynomials an exact quotient never has negative exponents, and this
    // check also guarantees termination.
    for (int s = 0; s < kNSym; ++s)
      if (qe[s] < 0) return std::nullopt;
    Poly step(qc, qe);
    Poly nr = r - step * b;
    if (!nr.is_zero() && expo_cmp(nr.lead().e, lr.e) >= 0) return std::nullopt;
    q.push_back({qe, std::move(qc)});
    r = std::move(nr);
  }
  return Poly::from_terms(std::move(q));
}

namespace {

Poly sign_norm(Poly g) {
  if (!g.is_zero() && g.lead().c < 0) return g.neg();
  return g;
}

// coefficient of v^k, with v stripped
Poly coeff_at(const Poly& f, int v, int k) {
  std::vector<Term> ts;
  for (const auto& t : f.terms())
    if (t.e[v] == k) {
      Term u = t;
      u.e[v] = 0;
      ts.push_back(std::move(u));
    }
  return Poly::from_terms(std::move(ts));
}

Poly content_wrt(const Poly& f, int v) {
  Poly c;
  int lo = f.min_exp(v), hi = f.max_exp(v);
  for (int k = hi; k >= lo; --k) {
    Poly ck = coeff_at(f, v, k);
    if (ck.is_zero()) continue;
    c = poly_gcd(c, ck);
    if (c.is_one()) break;
  }
  return c;
}

// pseudo-remainder of f by g in variable v (deg_v f >= deg_v g >= 1),
// integer content stripped per step to slow coefficient growth
Poly prem(Poly f, const Poly& g, int v) {
  int dg = g.max_exp(v);
  Poly lg = coeff_at(g, v, dg);
  while (!f.is_zero() && f.max_exp(v) >= dg) {
    int df = f.max_exp(v);
    Poly lf = coeff_at(f, v, df);
    Expo sh = expo_zero();
    sh[v] = static_cast<int16_t>(df - dg);
    f = lg * f - lf.shifted(sh) * g;
    if (!f.is_zero()) {
      Int ic = f.int_content();
      if (ic > 1) f = f.div_int(ic);
    }
  }
  return f;
}

Int height(const Poly& f) {
  Int h = 0;
  for (const auto& t : f.terms())
    if (boost::multiprecision::abs(t.c) > h) h = boost::multiprecision::abs(t.c);
  return h;
}

// substitute integer xi for variable v
Poly eval_var(const Poly& f, int v, const Int& xi) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Term u = t;
    int e = u.e[v];
    u.e[v] = 0;
    Int pw = 1;
    for (int k = 0; k < e; ++k) pw *= xi;
    u.c *= pw;
    ts.push_back(std::move(u));
  }
  return Poly::from_terms(std::move(ts));
}

// balanced remainder in (-xi/2, xi/2]
Int balanced_mod(const Int& c, const Int& xi) {
  Int r = c % xi;
  if (2 * r > xi) r -= xi;
  if (2 * r <= -xi) r += xi;
  return r;
}

// evaluation/reconstruction gcd heuristic; sound because every return is
// verified by exact division and completed by a recursive gcd of cofactors
std::optional<Poly> gcd_heu(const Poly& a, const Poly& b, int v, int degcap) {
  Int xi = 2 * (height(a) > height(b) ? height(a) : height(b)) + 29;
  int ones_seen = 0;
  for (int tries = 0; tries < 6; ++tries) {
    Poly A = eval_var(a, v, xi), B = eval_var(b, v, xi);
    if (!A.is_zero() && !B.is_zero()) {
      Poly sub = poly_gcd(A, B);
      // digits of sub in balanced base xi are the candidate's v-coefficients
      Poly g;
      Poly cur = std::move(sub);
      bool ok = true;
      for (int i = 0; !cur.is_zero(); ++i) {
        if (i > degcap) {
          ok = false;
          break;
        }
        std::vector<Term> dig, rest;
        for (const auto& t : cur.terms()) {
          Int r = balanced_mod(t.c, xi);
          if (r != 0) {
            Term d = t;
            d.c = r;
            d.e[v] = static_cast<int16_t>(i);
            dig.push_back(std::move(d));
          }
          Int q = (t.c - r) / xi;
          if (q != 0) rest.push_back({t.e, std::move(q)});
        }
        g += Poly::from_terms(std::move(dig));
        cur = Poly::from_terms(std::move(rest));
      }
      if (ok && !g.is_zero()) {
        Int ic = g.int_content();
        if (ic > 1) g = g.div_int(ic);
        if (g.is_one() || g.neg().is_one()) {
          // a unit candidate cannot be division-verified; trust coprimality
          // only when two independent evaluation points agree (a false
          // "coprime" would only under-cancel, never corrupt arithmetic)
          if (++ones_seen >= 2) return Poly(Int(1));
        } else {
          auto qa = divexact(a, g);
          if (qa.has_value()) {
            auto qb = divexact(b, g);
            if (qb.has_value()) {
              // g divides both; absorb whatever the cofactors still share
              // (strictly smaller inputs, recursion terminates)
              Poly extra = poly_gcd(*qa, *qb);
              if (!extra.is_one()) g = g * extra;
              return g;
            }
          }
        }
      }
    }
    xi = xi * 3 + 7;
  }
  return std::nullopt;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return sign_norm(b);
  if (b.is_zero()) return sign_norm(a);
  if (a == b || a == b.neg()) return sign_norm(a);

  Int ia = a.int_content(), ib = b.int_content();
  Int ig = boost::multiprecision::gcd(ia, ib);
  Poly pa = a.div_int(ia), pb = b.div_int(ib);

  if (pa.is_monomial() || pb.is_monomial()) {
    Expo m;
    for (int s = 0; s < kNSym; ++s)
      m[s] = static_cast<int16_t>(std::min(pa.min_exp(s), pb.min_exp(s)));
    return Poly(ig, m);
  }

  // pick a variable present in both; if none, only the integer part is common
  int v = -1, best = -1;
  for (int s = 0; s < kNSym; ++s) {
    int da = pa.max_exp(s), db = pb.max_exp(s);
    if (da > 0 && db > 0) {
      int sz = std::max(da, db);
      if (v == -1 || sz < best) v = s, best = sz;
    }
  }
  if (v == -1) {
    // a var absent from one poly cannot divide the gcd
    return Poly(ig);
  }

  auto heu =
      gcd_heu(pa, pb, v, std::min(pa.max_exp(v), pb.max_exp(v)));
  if (heu.has_value()) return sign_norm(heu->mul_int(ig));

  Poly ca = content_wrt(pa, v), cb = content_wrt(pb, v);
  Poly cg = poly_gcd(ca, cb);
  Poly f = *divexact(pa, ca), g = *divexact(pb, cb);
  if (f.max_exp(v) < g.max_exp(v)) std::swap(f, g);
  while (g.max_exp(v) > 0) {
    Poly r = prem(f, g, v);
    if (r.is_zero()) {
      f = std::move(g);
      Poly cf = content_wrt(f, v);
      f = *divexact(f, cf);
      return sign_norm((cg * f).mul_int(ig));
    }
    Poly cr = content_wrt(r, v);
    f = std::move(g);
    g = *divexact(r, cr);
  }
  // primitive parts are coprime in v
  return sign_norm(cg.mul_int(ig));
}

// ---- printing / parsing ----

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : t_) {
    Int c = t.c;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    bool any_sym = false;
    for (int sym = 0; sym < kNSym; ++sym)
      if (t.e[sym] != 0) any_sym = true;
    std::string mono;
    for (int sym = 0; sym < kNSym; ++sym) {
      int e = t.e[sym];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kSymNames[sym];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (!any_sym) {
      s += c.str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.str() + "*" + mono;
    }
  }
  return s;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip();
    return i < s.size() ? s[i++] : '\0';
  }
  Int integer() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::runtime_error("parse: expected integer at " +
                                         std::to_string(i) + " in '" + s + "'");
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }
  std::string ident() {
    skip();
    size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])))) ++j;
    std::string v = s.substr(i, j - i);
    i = j;
    return v;
  }
};

Term parse_term(Lexer& lx) {
  Term t{expo_zero(), Int(1)};
  bool saw_factor = false;
  for (;;) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.c *= lx.integer();
      saw_factor = true;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = lx.ident();
      int sym = sym_index(name);
      if (sym < 0) throw std::runtime_error("parse: unknown symbol '" + name + "'");
      int exp = 1;
      if (lx.peek() == '^') {
        lx.take();
        int sgn = 1;
        if (lx.peek() == '-') {
          lx.take();
          sgn = -1;
        }
        exp = sgn * static_cast<int>(lx.integer());
      }
      t.e[sym] = static_cast<int16_t>(t.e[sym] + exp);
      saw_factor = true;
    } else {
      throw std::runtime_error("parse: expected factor");
    }
    if (lx.peek() == '*') {
      lx.take();
      continue;
    }
    break;
  }
  if (!saw_factor) throw std::runtime_error("parse: empty term");
  return t;
}

}  // namespace

Poly parse_poly(const std::string& s) {
  Lexer lx{s};
  std::vector<Term> terms;
  int sign = 1;
  if (lx.peek() == '-') {
    lx.take();
    sign = -1;
  } else if (lx.peek() == '+') {
    lx.take();
  }
  for (;;) {
    Term t = parse_term(lx);
    t.c *= sign;
    terms.push_back(std::move(t));
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    break;
  }
  if (lx.peek() != '\0')
    throw std::runtime_error("parse: trailing input in '" + s + "'");
  return Poly::from_terms(std::move(terms));
}

}  // namespace qrll
