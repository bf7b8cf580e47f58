#include "modealg.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace qrll {

std::string gen_str(Gen g) {
  std::string s = "l";
  s += char('0' + g.gi());
  s += char('0' + g.gj());
  s += g.plus() ? 'p' : 'm';
  s += std::to_string(g.mode());
  if (g.inv()) s += '~';
  return s;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  long da = 0, db = 0;
  for (const Gen& g : a) da += g.mode();
  for (const Gen& g : b) db += g.mode();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      gen_lex_less);
}

Word word_normalize(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Gen g : w) {
    if (!out.empty() && g.invertible() && out.back().v == (g.v ^ 1u))
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += gen_str(w[i]);
  }
  return s;
}

int word_parity(const Word& w) {
  int p = 0;
  for (const Gen& g : w) p ^= g.odd() ? 1 : 0;
  return p;
}

bool Grade::operator<(const Grade& o) const {
  return std::tie(r1, r2, c1, c2, m) < std::tie(o.r1, o.r2, o.c1, o.c2, o.m);
}

Grade Grade::operator+(const Grade& o) const {
  return Grade{r1 + o.r1, r2 + o.r2, c1 + o.c1, c2 + o.c2, m + o.m};
}

Grade Grade::operator-(const Grade& o) const {
  return Grade{r1 - o.r1, r2 - o.r2, c1 - o.c1, c2 - o.c2, m - o.m};
}

Grade gen_grade(Gen g) {
  Grade gr;
  int s = g.inv() ? -1 : 1;
  (g.gi() == 1 ? gr.r1 : gr.r2) += s;
  (g.gj() == 1 ? gr.c1 : gr.c2) += s;
  gr.m += (g.plus() ? 1 : -1) * g.mode() * s;
  return gr;
}

Grade word_grade(const Word& w) {
  Grade gr;
  for (const Gen& g : w) gr = gr + gen_grade(g);
  return gr;
}

// ---------------------------------------------------------------- elements

Elem Elem::monomial(Word w, RatFunc c) {
  Elem e;
  e.add_term(word_normalize(w), std::move(c));
  return e;
}

void Elem::add_term(Word w, RatFunc c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(std::move(w), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

RatFunc Elem::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? RatFunc() : it->second;
}

Elem Elem::operator+(const Elem& o) const {
  Elem r = *this;
  r += o;
  return r;
}

Elem Elem::operator-(const Elem& o) const {
  Elem r = *this;
  r -= o;
  return r;
}

Elem& Elem::operator+=(const Elem& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

Elem Elem::operator*(const Elem& o) const {
  Elem r;
  for (const auto& [wa, ca] : t_)
    for (const auto& [wb, cb] : o.t_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(word_normalize(w), ca * cb);
    }
  return r;
}

Elem Elem::neg() const {
  Elem r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

Elem Elem::scaled(const RatFunc& c) const {
  Elem r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : t_) r.add_term(w, k * c);
  return r;
}

Elem Elem::dressed(int k) const { return scaled(dress_coeff(k)); }

const std::pair<const Word, RatFunc>& Elem::lead() const {
  if (t_.empty()) throw std::logic_error("lead of zero element");
  return *t_.begin();
}

std::string Elem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << word_str(w);
  }
  return os.str();
}

RatFunc dress_coeff(int k) {
  if (k == 0) return RatFunc(Int(1));
  return RatFunc::var(SG1, k);
}

// --------------------------------------------------------------- relations

RelationSet RelationSet::renamed_dressing(Sym from, Sym to) const {
  RelationSet out;
  out.rels.reserve(rels.size());
  for (const Relation& r : rels) {
    Elem e;
    for (const auto& [w, c] : r.e.terms())
      e += Elem::monomial(w, RatFunc(c.num().swapped(from, to),
                                     c.den().swapped(from, to)));
    out.rels.push_back({std::move(e), r.origin});
  }
  return out;
}

std::string RelationSet::dump() const {
  std::string s = "# mode exchange relation dump\n";
  for (const Relation& r : rels) {
    s += "# ";
    s += r.origin;
    s += '\n';
    s += r.e.str();
    s += '\n';
  }
  return s;
}

namespace {

// eta sign of a 0-based two-slot composite index: -1 iff both slots odd.
int eta_sign(int u, int v) { return (u == 1 && v == 1) ? -1 : 1; }

struct PairInfo {
  bool s1, s2;  // sign family of the z-leg / w-leg matrix
  int eL, eR;   // dressing exponent per series order on each side
  const char* name;
};

}  // namespace

RelationSet expand_rll(int trunc, int pad, const RBuilder& build) {
  const int N = trunc;
  const int A = trunc + pad;  // bidegree window and series depth
  RelationSet out;

  // Series coefficients of the structural matrix around ratio -> 0.  The
  // same series serves both sides; the mixed pair only differs by central
  // dressings attached per order.
  RMat rz = build(RatFunc::var(SZ));
  std::vector<Mat<RatFunc>> rc(static_cast<size_t>(A) + 1, Mat<RatFunc>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (rz.at(r, c).is_zero()) continue;
      DirectedSeries ds = expand(rz.at(r, c), SZ, Dir::toward_zero, 0, A);
      for (int t = 0; t <= A; ++t) rc[t].at(r, c) = ds.at(t);
    }

  const PairInfo pairs[3] = {{true, true, 0, 0, "++"},
                             {false, false, 0, 0, "--"},
                             {true, false, -1, 1, "+-"}};

  for (const PairInfo& sp : pairs) {
    for (int a = -A; a <= A; ++a)
      for (int b = -A; b <= A; ++b) {
        // Support of the series order t at bidegree (a,b), and the modes it
        // forces on the two legs.  Windows that would draw on modes beyond
        // the truncation are incomplete here and are skipped entirely.
        std::vector<std::array<int, 3>> ts;
        bool complete = true;
        for (int t = 0; t <= A; ++t) {
          int alpha = sp.s1 ? a - t : t - a;
          int beta = sp.s2 ? b + t : -b - t;
          if (alpha < 0 || beta < 0) continue;
          if (alpha > N || beta > N) {
            complete = false;
            break;
          }
          ts.push_back({t, alpha, beta});
        }
        if (!complete || ts.empty()) continue;

        for (int x = 0; x < 4; ++x)
          for (int y = 0; y < 4; ++y) {
            const int x1 = x >> 1, x2 = x & 1, y1 = y >> 1, y2 = y & 1;
            Elem e;
            for (const auto& [t, alpha, beta] : ts) {
              for (int m = 0; m < 4; ++m) {
                const int m1 = m >> 1, m2 = m & 1;
                // left side: R[x,m] (L1 eta L2 eta)[m,y]
                const RatFunc& cl = rc[t].at(x, m);
                if (!cl.is_zero()) {
                  int sg = eta_sign(y1, m2) * eta_sign(y1, y2);
                  Word w{Gen::make(sp.s1, m1 + 1, y1 + 1, alpha),
                         Gen::make(sp.s2, m2 + 1, y2 + 1, beta)};
                  RatFunc c = sg < 0 ? -cl : cl;
                  if (sp.eL * t != 0) c *= dress_coeff(2 * sp.eL * t);
                  e += Elem::monomial(std::move(w), std::move(c));
                }
                // right side: (eta L2 eta L1)[x,m] R[m,y]
                const RatFunc& cr = rc[t].at(m, y);
                if (!cr.is_zero()) {
                  int sg = eta_sign(x1, x2) * eta_sign(x1, m2);
                  Word w{Gen::make(sp.s2, x2 + 1, m2 + 1, beta),
                         Gen::make(sp.s1, x1 + 1, m1 + 1, alpha)};
                  RatFunc c = sg < 0 ? -cr : cr;
                  if (sp.eR * t != 0) c *= dress_coeff(2 * sp.eR * t);
                  e -= Elem::monomial(std::move(w), std::move(c));
                }
              }
            }
            if (e.is_zero()) continue;
            std::ostringstream id;
            id << "rll " << sp.name << " comp=(" << idx2_name(x) << ","
               << idx2_name(y) << ") coef=(" << a << "," << b << ")";
            out.rels.push_back({std::move(e), id.str()});
          }
      }
  }
  return out;
}

// ------------------------------------------------------------------ rules

void RuleSystem::add(const Elem& e) {
  Elem r = reduce(e);
  if (r.is_zero()) return;
  const Word lw = r.lead().first;
  if (lw.size() > lim_.max_lead_len) return;  // kept out, soundness unaffected
  if (rules_.size() >= lim_.max_rules)
    throw ResourceError("rewrite rule budget exceeded");
  Elem monic = r.scaled(r.lead().second.inv());
  max_lead_len_ = std::max(max_lead_len_, lw.size());
  rules_.emplace(lw, std::move(monic));
}

namespace {

Elem slice_mono(const Word& w, size_t lo, size_t hi) {
  return Elem::monomial(Word(w.begin() + lo, w.begin() + hi), RatFunc(Int(1)));
}

}  // namespace

namespace {

bool word_contains(const Word& big, const Word& sub) {
  if (sub.size() > big.size()) return false;
  for (size_t i = 0; i + sub.size() <= big.size(); ++i)
    if (std::equal(sub.begin(), sub.end(), big.begin() + i)) return true;
  return false;
}

bool word_proper(const Word& w) {
  return std::none_of(w.begin(), w.end(), [](Gen g) { return g.inv(); });
}

}  // namespace

void RuleSystem::add_relations(const RelationSet& rs) {
  // Seam closure.  Each adopted rule spawns its inverse-multiplied
  // consequences -- the overlaps between the rule and the implicit
  // cancellation x·x~ = 1 that reduce() applies eagerly.  A useful seam can
  // cancel against any term, not just the lead (the Ore exchange
  // l21·l22~ -> l22~·l21 is x~·(exchange of l22·l21)·x~), so spawning
  // considers the boundary letters of every term, on either side and both
  // at once.  Chains of spawns alternate and cancel, so this terminates;
  // the budget is a belt.  Adoption keeps the lead set an antichain (rules
  // whose lead contains a new lead are re-queued), so at most one rule ever
  // matches at a given word position.
  //
  // Full overlap completion is deliberately absent: in the localized
  // sector the lead ideal is not finitely generated (conjugating past an
  // inverse letter grows an unbounded rule family), and over the proper
  // letters the defining exchange relations already rewrite confluently,
  // which the property tests pin down.  Localized leads longer than the
  // Ore exchanges are refused outright: the length-graded order points
  // them at words the two-letter drift would kill, so adopting them only
  // derails scans.  Their consequences belong to the certificate stage.
  std::deque<Elem> queue;
  for (const Relation& r : rs.rels) {
    queue.push_back(r.e);
    base_.push_back(r.e);
  }
  size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > lim_.max_closure_rounds)
      throw ResourceError("seam closure budget exceeded");
    Elem red = reduce(queue.front());
    queue.pop_front();
    if (red.is_zero()) continue;
    const Word lw = red.lead().first;
    if (lw.size() >
        (word_proper(lw) ? lim_.max_lead_len : lim_.max_localized_lead))
      continue;  // kept out; reduction stays sound
    if (rules_.size() >= lim_.max_rules)
      throw ResourceError("rewrite rule budget exceeded");
    std::vector<Word> doomed;
    for (const auto& [L, r] : rules_)
      if (L.size() > lw.size() && word_contains(L, lw)) doomed.push_back(L);
    for (const Word& L : doomed) {
      queue.push_back(rules_.at(L));
      rules_.erase(L);
    }
    Elem monic = red.scaled(red.lead().second.inv());
    max_lead_len_ = std::max(max_lead_len_, lw.size());
    if (lw.size() <= lim_.max_seam_lead) {
      std::set<Gen> lefts, rights;
      for (const auto& [w, c] : monic.terms()) {
        if (w.empty()) continue;
        if (w.front().invertible()) lefts.insert(w.front().inverse());
        if (w.back().invertible()) rights.insert(w.back().inverse());
      }
      for (Gen gl : lefts) queue.push_back(Elem::gen(gl) * monic);
      for (Gen gr : rights) queue.push_back(monic * Elem::gen(gr));
      for (Gen gl : lefts)
        for (Gen gr : rights)
          queue.push_back(Elem::gen(gl) * monic * Elem::gen(gr));
    }
    rules_.emplace(lw, std::move(monic));
  }

  // Context alphabet for certificate rows: every letter seen in a defining
  // relation plus the inverses of the invertible ones.
  std::set<Gen> seen;
  for (const Elem& e : base_)
    for (const auto& [w, c] : e.terms())
      for (Gen g : w) {
        seen.insert(g);
        if (g.invertible()) seen.insert(g.inverse());
      }
  alphabet_.assign(seen.begin(), seen.end());
  comp_.clear();
}

const std::map<Word, Elem, WordGreater>& RuleSystem::component(
    const Grade& gt, int level) const {
  const auto key = std::make_pair(gt, level);
  auto hit = comp_.find(key);
  if (hit != comp_.end()) return hit->second;
  auto& ech = comp_[key];

  // context words up to the requested length, bucketed by grade; adjacent
  // inverse pairs are skipped since those normalize to shorter contexts
  std::map<Grade, std::vector<Word>> ctx;
  ctx[Grade{}].push_back(Word{});
  std::vector<Word> layer{Word{}};
  for (int l = 1; l <= level; ++l) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Gen g : alphabet_) {
        if (!w.empty()) {
          Gen back = w.back();
          if (back.invertible() && back.inverse().v == g.v) continue;
        }
        Word nw = w;
        nw.push_back(g);
        ctx[word_grade(nw)].push_back(nw);
        next.push_back(std::move(nw));
      }
    layer = std::move(next);
  }

  auto insert_row = [&](Elem row) {
    row = reduce(row);
    while (!row.is_zero()) {
      auto it = ech.find(row.lead().first);
      if (it == ech.end()) break;
      row -= it->second.scaled(row.lead().second);
    }
    if (row.is_zero()) return;
    if (ech.size() >= lim_.max_component_rows)
      throw ResourceError("certificate row budget exceeded");
    Elem monic = row.scaled(row.lead().second.inv());
    ech.emplace(monic.lead().first, std::move(monic));
  };

  // Rows come from the closed rule set, so the seam-derived inverse
  // consequences participate too.
  for (const auto& [lw, r] : rules_) {
    const Grade gr = word_grade(lw);
    for (const auto& [gu, us] : ctx) {
      auto vit = ctx.find(gt - gr - gu);
      if (vit == ctx.end()) continue;
      for (const Word& u : us)
        for (const Word& v : vit->second) {
          if (u.empty() && v.empty())
            insert_row(r);
          else
            insert_row(Elem::monomial(u, RatFunc(Int(1))) * r *
                       Elem::monomial(v, RatFunc(Int(1))));
        }
    }
  }
  return ech;
}

Elem RuleSystem::certify(const Elem& x) const {
  Elem cur = reduce(x);
  if (cur.is_zero()) return cur;
  {
    // Zero under the other scan strategy proves membership just as well.
    Elem alt = reduce_rightmost(x);
    if (alt.is_zero()) return alt;
  }
  size_t steps = 0;
  for (int level = 1; level <= lim_.max_ctx_len && !cur.is_zero(); ++level) {
    bool progress = true;
    while (progress && !cur.is_zero()) {
      progress = false;
      for (const auto& [w, c] : cur.terms()) {
        const auto& ech = component(word_grade(w), level);
        auto it = ech.find(w);
        if (it == ech.end()) continue;
        if (++steps > lim_.max_steps)
          throw ResourceError("certificate step budget exceeded");
        cur -= it->second.scaled(c);
        cur = reduce(cur);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

std::optional<Elem> RuleSystem::rewrite_word(const Word& w,
                                             bool rightmost) const {
  const size_t n = w.size();
  if (n == 0 || rules_.empty()) return std::nullopt;
  auto try_at = [&](size_t i) -> std::optional<Elem> {
    const size_t cap = std::min(max_lead_len_, n - i);
    for (size_t len = cap; len >= 1; --len) {
      Word sub(w.begin() + i, w.begin() + i + len);
      auto it = rules_.find(sub);
      if (it == rules_.end()) continue;
      Elem tail = it->second;
      tail.t_.erase(tail.t_.begin());  // monic lead off
      return (slice_mono(w, 0, i) * tail * slice_mono(w, i + len, n)).neg();
    }
    return std::nullopt;
  };
  if (rightmost) {
    for (size_t i = n; i-- > 0;)
      if (auto r = try_at(i)) return r;
  } else {
    for (size_t i = 0; i < n; ++i)
      if (auto r = try_at(i)) return r;
  }
  return std::nullopt;
}

Elem RuleSystem::reduce_impl(const Elem& x, bool rightmost) const {
  const bool trace = std::getenv("QRLL_TRACE_REDUCE") != nullptr;
  Elem out, pending = x;
  size_t steps = 0;
  while (!pending.is_zero()) {
    auto it = pending.t_.begin();
    Word w = it->first;
    RatFunc c = it->second;
    pending.t_.erase(it);
    auto repl = rewrite_word(w, rightmost);
    if (!repl) {
      out.add_term(std::move(w), std::move(c));
      continue;
    }
    if (trace && steps < 60)
      std::fprintf(stderr, "[reduce] %s -> lead %s\n", word_str(w).c_str(),
                   repl->is_zero() ? "0"
                                   : word_str(repl->lead().first).c_str());
    if (++steps > lim_.max_steps)
      throw ResourceError("rewrite step budget exceeded");
    pending += repl->scaled(c);
    if (pending.size() + out.size() > lim_.max_terms)
      throw ResourceError("term budget exceeded");
  }
  return out;
}

}  // namespace qrll
