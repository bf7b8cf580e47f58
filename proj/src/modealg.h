#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratfunc.h"
#include "rmatrix.h"

// Noncommutative words in the matrix-mode letters l_ij^{s,k} (s a sign family,
// k >= 0 the mode), with coefficients rational in p, q and the central
// invertible dressing symbol g1.  Only the four zero-mode diagonal letters
// carry inverses.  Everything downstream (currents, coproducts, the
// evaluation map) is built on top of this element type and the rewrite
// system extracted from the exchange relations.

namespace qrll {

// ---------------------------------------------------------------- letters

// Packed so that the numeric order of the raw value is the canonical letter
// order: minus family before plus, then row-major (i,j), then mode
// ascending, inverse flag last.
struct Gen {
  uint32_t v = 0;

  static Gen make(bool plus, int i, int j, int mode, bool inv = false) {
    Gen g;
    g.v = (uint32_t(plus ? 1 : 0) << 19) | (uint32_t(i - 1) << 18) |
          (uint32_t(j - 1) << 17) | (uint32_t(mode) << 1) |
          uint32_t(inv ? 1 : 0);
    return g;
  }
  bool plus() const { return (v >> 19) & 1; }
  int gi() const { return int((v >> 18) & 1) + 1; }
  int gj() const { return int((v >> 17) & 1) + 1; }
  int mode() const { return int((v >> 1) & 0xffff); }
  bool inv() const { return v & 1; }
  bool odd() const { return gi() != gj(); }
  // Inverses exist only for the zero modes of the diagonal entries.
  bool invertible() const { return gi() == gj() && mode() == 0; }
  Gen inverse() const {
    Gen g;
    g.v = v ^ 1u;
    return g;
  }
  bool operator==(const Gen& o) const { return v == o.v; }
  bool operator<(const Gen& o) const { return v < o.v; }
};

std::string gen_str(Gen g);

using Word = std::vector<Gen>;

// Letterwise tiebreak: inverse letters sort below every proper letter, so
// every length-preserving exchange drains the adjoined inverses toward the
// front of a word.  With packed-value order the drift direction depends on
// the entry, and words like l21·(inverses)·l12 end up irreducible from
// both ends even when they vanish in the algebra.
inline bool gen_lex_less(Gen a, Gen b) {
  if (a.inv() != b.inv()) return a.inv();
  return a.v < b.v;
}

// Canonical word order: length, then total mode degree, then letterwise.
bool word_less(const Word& a, const Word& b);
struct WordGreater {
  bool operator()(const Word& a, const Word& b) const {
    return word_less(b, a);
  }
};

// Free reduction: cancel adjacent x·x^{-1} pairs (diagonal zero modes only).
Word word_normalize(const Word& w);
std::string word_str(const Word& w);
int word_parity(const Word& w);  // number of off-diagonal letters mod 2

// Multigrading of a word: signed row/column letter counts (inverse letters
// count -1) and the signed mode sum (minus family modes count negative).
// The dressing exponent is deliberately not part of the grade: it lives in
// the coefficient field.
struct Grade {
  int r1 = 0, r2 = 0, c1 = 0, c2 = 0, m = 0;
  bool operator==(const Grade&) const = default;
  bool operator<(const Grade& o) const;
  Grade operator+(const Grade& o) const;
  Grade operator-(const Grade& o) const;
  bool is_zero() const { return *this == Grade{}; }
};
Grade word_grade(const Word& w);
Grade gen_grade(Gen g);

// ---------------------------------------------------------------- elements

class Elem {
 public:
  using TermMap = std::map<Word, RatFunc, WordGreater>;

  Elem() = default;
  static Elem zero() { return Elem(); }
  static Elem unit() { return monomial(Word{}, RatFunc(Int(1))); }
  static Elem gen(Gen g) { return monomial(Word{g}, RatFunc(Int(1))); }
  static Elem monomial(Word w, RatFunc c);

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  RatFunc coeff(const Word& w) const;

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem neg() const;
  Elem scaled(const RatFunc& c) const;
  // Multiply by the k-th power of the central dressing letter.
  Elem dressed(int k) const;
  bool operator==(const Elem& o) const { return t_ == o.t_; }

  // Largest term under the canonical order.
  const std::pair<const Word, RatFunc>& lead() const;

  std::string str() const;

 private:
  TermMap t_;  // keys descending; no zero coefficients
  void add_term(Word w, RatFunc c);
  friend class RuleSystem;
};

// Central dressing as a coefficient: g1^k.
RatFunc dress_coeff(int k);

// ---------------------------------------------------------------- relations

struct Relation {
  Elem e;
  std::string origin;  // stable id: sign pair, matrix component, coefficient
};

struct RelationSet {
  std::vector<Relation> rels;
  // Identical content with the slot-1 dressing symbol renamed; used when the
  // same defining relations act on a different tensor slot.
  RelationSet renamed_dressing(Sym from, Sym to) const;
  std::string dump() const;  // canonical, byte-stable
};

// Exchange relations between the mode letters, extracted coefficientwise
// from the quadratic matrix identity.  `trunc` caps the retained modes,
// `pad` extends the window of retained bidegrees beyond the minimum (the
// deeper antidiagonal rows sharpen the zero-mode sector).  Only windows
// whose coefficient sum is complete at this truncation are emitted.  The
// builder hook substitutes a mutated structural matrix.
RelationSet expand_rll(int trunc, int pad = 2,
                       const RBuilder& build = plain_r_builder());

// ------------------------------------------------------------------ rules

struct ReduceLimits {
  size_t max_rules = 50000;
  size_t max_steps = 5000000;
  size_t max_terms = 2000000;
  size_t max_lead_len = 8;       // longer candidate rules are skipped
  // The localized sector has no finite rule basis, so only the two-letter
  // rules (the Ore exchanges and annihilators) are kept there, and seams
  // are only spawned from short leads; everything longer is the
  // certificate stage's job.
  size_t max_localized_lead = 2;
  size_t max_seam_lead = 3;
  size_t max_closure_rounds = 40000;  // seam-consequence budget
  size_t max_component_rows = 200000;  // certificate echelon budget
  int max_ctx_len = 2;  // per-side context length certificates escalate to
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two-stage reduction engine.
//
// Stage 1 is a rewrite system: relations echelonized by lead word, closed
// under the seams with the implicit cancellation x·x~ = 1.  reduce()
// computes a normal form by substring replacement; every step strictly
// decreases the term multiset in a well-order, so it terminates.  The
// defining exchange relations rewrite inverse-free words confluently (a
// property the tests pin down); no such claim holds in the localized
// sector, whose lead ideal is not finitely generated -- there the two
// scan strategies may park on different normal forms.
//
// Stage 2 (certify) covers the gap.  Reduction to zero under either scan
// strategy is already an ideal-membership proof; failing that, each
// multigrade component lazily builds an echelon of context rows u·r·v
// (r a rewrite rule, u,v context words with grades matching the
// component) and the residual is eliminated against it.  Context length
// escalates to max_ctx_len while a residual survives.  A zero result is
// an ideal-membership certificate; a nonzero result is an upper bound on
// the residual, never a false zero.
class RuleSystem {
 public:
  explicit RuleSystem(ReduceLimits lim = {}) : lim_(lim) {}
  void set_limits(ReduceLimits lim) { lim_ = lim; }

  // Echelon insertion: reduce, then either drop (dependent) or adopt the
  // monic remainder as a new rule keyed by its lead word.
  void add(const Elem& e);
  // Insert every relation plus the terminating seam closure.
  void add_relations(const RelationSet& rs);

  Elem reduce(const Elem& x) const { return reduce_impl(x, false); }
  // Alternative scan strategy (rightmost match first); normal forms agree
  // with the leftmost strategy wherever the system is confluent.
  Elem reduce_rightmost(const Elem& x) const { return reduce_impl(x, true); }

  // Stage-1 reduction plus component-certificate elimination.
  Elem certify(const Elem& x) const;

  size_t rule_count() const { return rules_.size(); }
  const std::map<Word, Elem, WordGreater>& rules() const { return rules_; }
  size_t component_count() const { return comp_.size(); }

 private:
  std::map<Word, Elem, WordGreater> rules_;  // lead word -> monic element
  ReduceLimits lim_;
  size_t max_lead_len_ = 0;
  // retained defining relations and the context alphabet for certificates
  std::vector<Elem> base_;
  std::vector<Gen> alphabet_;
  mutable std::map<std::pair<Grade, int>, std::map<Word, Elem, WordGreater>>
      comp_;

  Elem reduce_impl(const Elem& x, bool rightmost) const;
  // One rewrite of a single word if some rule lead occurs inside it.
  std::optional<Elem> rewrite_word(const Word& w, bool rightmost) const;
  const std::map<Word, Elem, WordGreater>& component(const Grade& g,
                                                     int level) const;
};

}  // namespace qrll
