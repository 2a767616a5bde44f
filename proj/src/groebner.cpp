// Copyright 2026 The fmodlen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmodlen/groebner.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace fmodlen {
namespace detail {
namespace {

// Term of an element of a free module: coefficient * monomial * e_comp.
struct MTerm {
  Monomial mon;
  uint32_t comp;
  FqElem coef;
};

// Module elements are MTerm vectors sorted strictly descending under the
// block-TOP order below.
using MPoly = std::vector<MTerm>;

// Block order: components below fblock (the ambient free module) beat the
// tracker components; within a block, monomial first (ring order), then lower
// component index. An elimination order for the ambient block, which is what
// makes the tracker extraction yield syzygies.
struct ModCtx {
  const PolyRing* ring = nullptr;
  uint32_t fblock = 0;
  std::vector<int> twists;  // per component, ambient block then trackers

  // Ambient block dominates the tracker block. Within the ambient block the
  // order is term-over-position; within the tracker block position comes
  // first (leftmost column largest), which normalizes syzygy leads to the
  // classical Koszul form.
  int cmp(const MTerm& a, const MTerm& b) const {
    bool af = a.comp < fblock, bf = b.comp < fblock;
    if (af != bf) return af ? 1 : -1;
    if (!af && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    int c = monomial_cmp(a.mon, b.mon, ring->order());
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  int term_degree(const MTerm& t) const {
    return t.mon.degree() + twists[static_cast<size_t>(t.comp)];
  }
};

// Geobucket accumulator (Yan): buckets of geometrically growing capacity;
// merging costs stay near-linear even for the cancellation-heavy divisions in
// the chain-map lifts. Consumed fronts advance a cursor, they are not erased.
class Geobucket {
 public:
  Geobucket(const ModCtx& ctx, const Fq& fq) : ctx_(ctx), fq_(fq) {}

  static size_t cap(size_t k) { return size_t{16} << (2 * k); }

  void add(MPoly stream) {
    if (stream.empty()) return;
    size_t k = 0;
    while (cap(k) < stream.size()) ++k;
    while (true) {
      if (buckets_.size() <= k) buckets_.resize(k + 1);
      MPoly merged = merge(buckets_[k], stream);
      if (merged.size() <= cap(k)) {
        buckets_[k].t = std::move(merged);
        buckets_[k].head = 0;
        return;
      }
      buckets_[k].t.clear();
      buckets_[k].head = 0;
      stream = std::move(merged);
      ++k;
    }
  }

  // Removes and returns the greatest term, summing duplicates across buckets
  // and skipping full cancellations.
  std::optional<MTerm> pop_max() {
    while (true) {
      int best = -1;
      for (size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].empty()) continue;
        if (best < 0 ||
            ctx_.cmp(buckets_[k].front(), buckets_[static_cast<size_t>(best)].front()) > 0)
          best = static_cast<int>(k);
      }
      if (best < 0) return std::nullopt;
      MTerm top = buckets_[static_cast<size_t>(best)].front();
      FqElem sum = fq_.zero();
      for (auto& b : buckets_) {
        if (!b.empty() && b.front().comp == top.comp && b.front().mon == top.mon) {
          sum = fq_.add(sum, b.front().coef);
          ++b.head;
        }
      }
      if (!fq_.is_zero(sum)) {
        top.coef = sum;
        return top;
      }
    }
  }

 private:
  struct Bucket {
    MPoly t;
    size_t head = 0;
    bool empty() const { return head >= t.size(); }
    size_t live() const { return t.size() - head; }
    const MTerm& front() const { return t[head]; }
  };

  MPoly merge(const Bucket& a, const MPoly& b) const {
    MPoly out;
    out.reserve(a.live() + b.size());
    size_t i = a.head, j = 0;
    while (i < a.t.size() && j < b.size()) {
      int c = ctx_.cmp(a.t[i], b[j]);
      if (c > 0) {
        out.push_back(a.t[i++]);
      } else if (c < 0) {
        out.push_back(b[j++]);
      } else {
        FqElem s = fq_.add(a.t[i].coef, b[j].coef);
        if (!fq_.is_zero(s)) out.push_back(MTerm{a.t[i].mon, a.t[i].comp, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.t.size(); ++i) out.push_back(a.t[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  const ModCtx& ctx_;
  const Fq& fq_;
  std::vector<Bucket> buckets_;
};

struct ReducerRef {
  uint16_t mask;  // support of the lead monomial
  Monomial mon;
  uint32_t index;
};

// A set of monic module elements organized for lead-divisibility lookup.
class ReducerSet {
 public:
  explicit ReducerSet(const ModCtx& ctx, const Fq& fq) : ctx_(&ctx), fq_(&fq) {}

  size_t size() const { return elems_.size(); }
  const MPoly& at(size_t i) const { return elems_[i]; }

  void add(MPoly g) {
    const MTerm& lt = g.front();
    if (by_comp_.size() <= lt.comp) by_comp_.resize(lt.comp + 1);
    by_comp_[lt.comp].push_back(
        ReducerRef{lt.mon.support_mask(), lt.mon, static_cast<uint32_t>(elems_.size())});
    elems_.push_back(std::move(g));
  }

  // First (insertion order) element whose lead divides t; -1 if none.
  int find(const MTerm& t, int exclude = -1) const {
    if (t.comp >= by_comp_.size()) return -1;
    uint16_t tmask = t.mon.support_mask();
    for (const auto& r : by_comp_[t.comp]) {
      if (static_cast<int>(r.index) == exclude) continue;
      if ((r.mask & ~tmask) != 0) continue;
      if (r.mon.divides(t.mon)) return static_cast<int>(r.index);
    }
    return -1;
  }

 private:
  const ModCtx* ctx_;
  const Fq* fq_;
  std::vector<MPoly> elems_;
  std::vector<std::vector<ReducerRef>> by_comp_;
};

MPoly scaled_tail(const MPoly& g, const Monomial& shift, FqElem c, const Fq& fq) {
  MPoly out;
  out.reserve(g.size() - 1);
  for (size_t i = 1; i < g.size(); ++i)
    out.push_back(MTerm{g[i].mon.times(shift), g[i].comp, fq.mul(g[i].coef, c)});
  return out;
}

// Unique normal form against the (monic) reducers. Exclude skips one element,
// used by tail autoreduction.
MPoly normal_form_mod(MPoly v, const ReducerSet& red, const ModCtx& ctx, const Fq& fq,
                      int exclude = -1) {
  Geobucket bucket(ctx, fq);
  bucket.add(std::move(v));
  MPoly rem;
  while (auto lt = bucket.pop_max()) {
    int gi = red.find(*lt, exclude);
    if (gi < 0) {
      rem.push_back(*lt);
      continue;
    }
    const MPoly& g = red.at(static_cast<size_t>(gi));
    Monomial shift = lt->mon.divided_by(g.front().mon);
    bucket.add(scaled_tail(g, shift, fq.neg(lt->coef), fq));
  }
  return rem;
}

MPoly make_monic(MPoly g, const Fq& fq) {
  FqElem inv = fq.inv(g.front().coef);
  for (auto& t : g) t.coef = fq.mul(t.coef, inv);
  return g;
}

struct PairRec {
  int deg;
  uint32_t i, j;
  // min-heap: smallest degree first, ties by indices
  friend bool operator>(const PairRec& a, const PairRec& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

// Buchberger over a free module with the normal selection strategy. The chain
// criterion uses the classical sound form (strict divisibility on both
// subproducts plus processed flags). The product criterion is only valid for
// rank-one inputs without trackers; enabling it in the augmented runs would
// silently drop Koszul-type syzygies.
class Engine {
 public:
  Engine(const ModCtx& ctx, const Fq& fq, bool product_criterion, const Budget* budget)
      : ctx_(ctx), fq_(fq), red_(ctx, fq), product_criterion_(product_criterion), budget_(budget) {}

  void run(std::vector<MPoly> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      uint32_t idx = static_cast<uint32_t>(red_.size());
      red_.add(make_monic(std::move(g), fq_));
      add_pairs(idx);
    }
    size_t steps = 0;
    while (!queue_.empty()) {
      if (budget_ && (++steps & 63) == 0) budget_->check("groebner basis");
      PairRec pr = queue_.top();
      queue_.pop();
      const MPoly& gi = red_.at(pr.i);
      const MPoly& gj = red_.at(pr.j);
      if (skip_pair(pr, gi, gj)) {
        mark_done(pr.i, pr.j);
        continue;
      }
      Monomial lcm = Monomial::lcm(gi.front().mon, gj.front().mon);
      MPoly s = spair(gi, gj, lcm);
      mark_done(pr.i, pr.j);
      MPoly r = normal_form_mod(std::move(s), red_, ctx_, fq_);
      if (r.empty()) continue;
      uint32_t idx = static_cast<uint32_t>(red_.size());
      red_.add(make_monic(std::move(r), fq_));
      add_pairs(idx);
    }
  }

  // Minimal, tail-reduced, monic, sorted ascending by lead.
  std::vector<MPoly> reduced_basis() {
    std::vector<uint32_t> order(red_.size());
    for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
      int c = ctx_.cmp(red_.at(a).front(), red_.at(b).front());
      if (c != 0) return c < 0;
      return a < b;
    });
    // Keep leads not divisible by an earlier kept lead (divisors sort first).
    ReducerSet kept(ctx_, fq_);
    for (uint32_t i : order) {
      const MTerm& lt = red_.at(i).front();
      if (kept.find(lt) < 0) kept.add(red_.at(i));
    }
    std::vector<MPoly> out;
    out.reserve(kept.size());
    for (size_t i = 0; i < kept.size(); ++i)
      out.push_back(normal_form_mod(kept.at(i), kept, ctx_, fq_, static_cast<int>(i)));
    std::sort(out.begin(), out.end(),
              [&](const MPoly& a, const MPoly& b) { return ctx_.cmp(a.front(), b.front()) < 0; });
    return out;
  }

 private:
  static uint64_t key(uint32_t i, uint32_t j) { return (static_cast<uint64_t>(i) << 32) | j; }
  void mark_done(uint32_t i, uint32_t j) { done_.insert(key(i, j)); }
  bool is_done(uint32_t i, uint32_t j) const {
    return done_.count(key(std::min(i, j), std::max(i, j))) != 0;
  }

  void add_pairs(uint32_t idx) {
    const MTerm& lt = red_.at(idx).front();
    for (uint32_t k = 0; k < idx; ++k) {
      const MTerm& lk = red_.at(k).front();
      if (lk.comp != lt.comp) continue;
      Monomial lcm = Monomial::lcm(lk.mon, lt.mon);
      queue_.push(PairRec{lcm.degree() + ctx_.twists[lt.comp], k, idx});
    }
  }

  bool skip_pair(const PairRec& pr, const MPoly& gi, const MPoly& gj) {
    const Monomial& mi = gi.front().mon;
    const Monomial& mj = gj.front().mon;
    if (product_criterion_ && mi.coprime_with(mj)) return true;
    Monomial lcm = Monomial::lcm(mi, mj);
    uint32_t comp = gi.front().comp;
    for (uint32_t k = 0; k < red_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      const MTerm& lk = red_.at(k).front();
      if (lk.comp != comp || !lk.mon.divides(lcm)) continue;
      if (Monomial::lcm(mi, lk.mon) == lcm || Monomial::lcm(mj, lk.mon) == lcm) continue;
      if (is_done(pr.i, k) && is_done(pr.j, k)) return true;
    }
    return false;
  }

  MPoly spair(const MPoly& gi, const MPoly& gj, const Monomial& lcm) const {
    Monomial si = lcm.divided_by(gi.front().mon);
    Monomial sj = lcm.divided_by(gj.front().mon);
    Geobucket b(ctx_, fq_);
    MPoly a;
    a.reserve(gi.size());
    for (const auto& t : gi) a.push_back(MTerm{t.mon.times(si), t.comp, t.coef});
    b.add(std::move(a));
    MPoly c;
    c.reserve(gj.size());
    for (const auto& t : gj) c.push_back(MTerm{t.mon.times(sj), t.comp, fq_.neg(t.coef)});
    b.add(std::move(c));
    MPoly out;
    while (auto t = b.pop_max()) out.push_back(*t);
    return out;
  }

  const ModCtx& ctx_;
  const Fq& fq_;
  ReducerSet red_;
  bool product_criterion_;
  const Budget* budget_;
  std::priority_queue<PairRec, std::vector<PairRec>, std::greater<PairRec>> queue_;
  std::unordered_set<uint64_t> done_;
};

MPoly poly_to_mpoly(const Poly& f, uint32_t comp) {
  MPoly out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) out.push_back(MTerm{t.mon, comp, t.coef});
  return out;
}

Poly mpoly_component(const RingPtr& ring, const MPoly& g, uint32_t comp) {
  std::vector<Term> ts;
  for (const auto& t : g)
    if (t.comp == comp) ts.push_back(Term{t.mon, t.coef});
  return Poly::from_terms(ring, std::move(ts));
}

}  // namespace

// Groebner data for a graded matrix: reduced basis of the augmented module
// (columns with trackers), plus the extracted syzygy matrix.
class ModuleBasisImpl {
 public:
  ModuleBasisImpl(const GradedMatrix& m, const Budget* budget) : m_(m) {
    const RingPtr& ring = m.ring();
    uint32_t rows = static_cast<uint32_t>(m.rows());
    uint32_t cols = static_cast<uint32_t>(m.cols());
    ctx_.ring = ring.get();
    ctx_.fblock = rows;
    ctx_.twists.reserve(rows + cols);
    for (int i = 0; i < m.rows(); ++i) ctx_.twists.push_back(m.target().twists[static_cast<size_t>(i)]);
    for (int j = 0; j < m.cols(); ++j) ctx_.twists.push_back(m.source().twists[static_cast<size_t>(j)]);

    const Fq& fq = *ring->field();
    std::vector<MPoly> gens;
    gens.reserve(cols);
    for (uint32_t j = 0; j < cols; ++j) {
      // Column j plus its tracker unit; invariant: ambient part equals the
      // tracker part applied to the original columns.
      std::vector<MTerm> ts;
      for (uint32_t i = 0; i < rows; ++i) {
        const Poly& f = m.entry(static_cast<int>(i), static_cast<int>(j));
        for (const auto& t : f.terms()) ts.push_back(MTerm{t.mon, i, t.coef});
      }
      ts.push_back(MTerm{Monomial::one(ring->nvars()), rows + j, fq.one()});
      std::sort(ts.begin(), ts.end(),
                [&](const MTerm& a, const MTerm& b) { return ctx_.cmp(a, b) > 0; });
      gens.push_back(std::move(ts));
    }
    Engine eng(ctx_, fq, /*product_criterion=*/false, budget);
    eng.run(std::move(gens));
    basis_ = eng.reduced_basis();
    reducers_ = std::make_unique<ReducerSet>(ctx_, fq);
    for (const auto& g : basis_) reducers_->add(g);
    extract_syzygies();
  }

  const GradedMatrix& matrix() const { return m_; }
  const GradedMatrix& syzygy_matrix() const { return syz_; }

  ColumnBasis::Division divide(const std::vector<Poly>& v) const {
    const RingPtr& ring = m_.ring();
    const Fq& fq = *ring->field();
    if (static_cast<int>(v.size()) != m_.rows())
      throw std::invalid_argument("vector length does not match the target rank");
    MPoly work;
    for (uint32_t i = 0; i < static_cast<uint32_t>(m_.rows()); ++i)
      for (const auto& t : v[i].terms()) work.push_back(MTerm{t.mon, i, t.coef});
    std::sort(work.begin(), work.end(),
              [&](const MTerm& a, const MTerm& b) { return ctx_.cmp(a, b) > 0; });
    MPoly nf = normal_form_mod(std::move(work), *reducers_, ctx_, fq);
    ColumnBasis::Division out;
    out.remainder.reserve(static_cast<size_t>(m_.rows()));
    for (uint32_t i = 0; i < static_cast<uint32_t>(m_.rows()); ++i)
      out.remainder.push_back(mpoly_component(ring, nf, i));
    out.quotient.reserve(static_cast<size_t>(m_.cols()));
    // Invariant along reduction: ambient - tracker*columns is constant, so
    // v = remainder - sum tracker_t * col_t; the quotient flips the sign.
    for (uint32_t j = 0; j < static_cast<uint32_t>(m_.cols()); ++j) {
      Poly w = mpoly_component(ring, nf, static_cast<uint32_t>(m_.rows()) + j);
      out.quotient.push_back(-w);
    }
    return out;
  }

 private:
  void extract_syzygies() {
    const RingPtr& ring = m_.ring();
    uint32_t rows = static_cast<uint32_t>(m_.rows());
    std::vector<const MPoly*> pure;
    for (const auto& g : basis_) {
      bool ambient = false;
      for (const auto& t : g)
        if (t.comp < rows) {
          ambient = true;
          break;
        }
      if (!ambient) pure.push_back(&g);
    }
    GradedFreeModule src;
    for (const MPoly* g : pure) src.twists.push_back(ctx_.term_degree(g->front()));
    syz_ = GradedMatrix(ring, m_.source(), src);
    for (size_t col = 0; col < pure.size(); ++col)
      for (uint32_t j = 0; j < static_cast<uint32_t>(m_.cols()); ++j)
        syz_.set_entry(static_cast<int>(j), static_cast<int>(col),
                       mpoly_component(ring, *pure[col], rows + j));
  }

  GradedMatrix m_;
  ModCtx ctx_;
  std::vector<MPoly> basis_;
  std::unique_ptr<ReducerSet> reducers_;
  GradedMatrix syz_;
};

}  // namespace detail

ColumnBasis::ColumnBasis(const GradedMatrix& m, const Budget* budget)
    : impl_(std::make_unique<detail::ModuleBasisImpl>(m, budget)) {}
ColumnBasis::~ColumnBasis() = default;
ColumnBasis::ColumnBasis(ColumnBasis&&) noexcept = default;
ColumnBasis& ColumnBasis::operator=(ColumnBasis&&) noexcept = default;

const GradedMatrix& ColumnBasis::matrix() const { return impl_->matrix(); }
const GradedMatrix& ColumnBasis::syzygy_matrix() const { return impl_->syzygy_matrix(); }

ColumnBasis::Division ColumnBasis::divide(const std::vector<Poly>& v) const {
  return impl_->divide(v);
}

bool ColumnBasis::contains(const std::vector<Poly>& v) const {
  auto d = impl_->divide(v);
  for (const auto& r : d.remainder)
    if (!r.is_zero()) return false;
  return true;
}

GradedMatrix syzygies(const GradedMatrix& m, const Budget* budget) {
  return detail::ModuleBasisImpl(m, budget).syzygy_matrix();
}

namespace {

// Ideals are the rank-one module case; the product criterion is sound there.
detail::ModCtx ideal_ctx(const RingPtr& ring) {
  detail::ModCtx ctx;
  ctx.ring = ring.get();
  ctx.fblock = 1;
  ctx.twists = {0};
  return ctx;
}

}  // namespace

GroebnerBasis reduced_groebner(const RingPtr& ring, const std::vector<Poly>& gens,
                               const Budget* budget) {
  detail::ModCtx ctx = ideal_ctx(ring);
  const Fq& fq = *ring->field();
  std::vector<detail::MPoly> input;
  for (const auto& f : gens) {
    if (f.is_null()) throw std::invalid_argument("null polynomial");
    if (!f.is_zero()) input.push_back(detail::poly_to_mpoly(f, 0));
  }
  detail::Engine eng(ctx, fq, /*product_criterion=*/true, budget);
  eng.run(std::move(input));
  GroebnerBasis out;
  out.ring = ring;
  for (const auto& g : eng.reduced_basis())
    out.elements.push_back(detail::mpoly_component(ring, g, 0));
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  detail::ModCtx ctx = ideal_ctx(gb.ring);
  const Fq& fq = *gb.ring->field();
  detail::ReducerSet red(ctx, fq);
  for (const auto& g : gb.elements) red.add(detail::poly_to_mpoly(g, 0));
  auto nf = detail::normal_form_mod(detail::poly_to_mpoly(f, 0), red, ctx, fq);
  return detail::mpoly_component(gb.ring, nf, 0);
}

bool groebner_certificate(const GroebnerBasis& gb) {
  detail::ModCtx ctx = ideal_ctx(gb.ring);
  const Fq& fq = *gb.ring->field();
  detail::ReducerSet red(ctx, fq);
  for (const auto& g : gb.elements) red.add(detail::poly_to_mpoly(g, 0));
  for (size_t i = 0; i < gb.elements.size(); ++i) {
    for (size_t j = i + 1; j < gb.elements.size(); ++j) {
      const Poly& a = gb.elements[i];
      const Poly& b = gb.elements[j];
      Monomial lcm = Monomial::lcm(a.leading_term().mon, b.leading_term().mon);
      Poly s = a.times_term(lcm.divided_by(a.leading_term().mon),
                            gb.ring->field()->inv(a.leading_term().coef)) -
               b.times_term(lcm.divided_by(b.leading_term().mon),
                            gb.ring->field()->inv(b.leading_term().coef));
      auto nf = detail::normal_form_mod(detail::poly_to_mpoly(s, 0), red, ctx, fq);
      if (!nf.empty()) return false;
    }
  }
  return true;
}

}  // namespace fmodlen
