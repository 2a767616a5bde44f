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

#include "fmodlen/homalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmodlen {

const GradedFreeModule& FreeResolution::module(int i) const {
  if (i < 0) throw std::out_of_range("resolution index");
  if (i == 0) return f0;
  if (i <= length()) return diffs[static_cast<size_t>(i - 1)].source();
  static const GradedFreeModule kEmpty{};
  return kEmpty;
}

GradedMatrix FreeResolution::diff(int i) const {
  if (i < 1) throw std::out_of_range("differential index");
  if (i <= length()) return diffs[static_cast<size_t>(i - 1)];
  if (!complete)
    throw std::logic_error("differential beyond an incomplete resolution");
  return GradedMatrix(ring, module(i - 1), GradedFreeModule{});
}

namespace {

GradedMatrix delete_row(const GradedMatrix& m, int s) {
  GradedFreeModule target;
  for (int i = 0; i < m.rows(); ++i)
    if (i != s) target.twists.push_back(m.target().twists[static_cast<size_t>(i)]);
  GradedMatrix out(m.ring(), target, m.source());
  for (int i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == s) continue;
    for (int j = 0; j < m.cols(); ++j) out.set_entry(oi, j, m.entry(i, j));
    ++oi;
  }
  return out;
}

GradedMatrix delete_col(const GradedMatrix& m, int t) {
  GradedFreeModule source;
  for (int j = 0; j < m.cols(); ++j)
    if (j != t) source.twists.push_back(m.source().twists[static_cast<size_t>(j)]);
  GradedMatrix out(m.ring(), m.target(), source);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == t) continue;
      out.set_entry(i, oj++, m.entry(i, j));
    }
  return out;
}

// One unit-entry elimination at chain level k (1-based: chain[k-1] is d_k).
// Removes the trivial subcomplex R(-a) =~ R(-a) through entry (s, t),
// adjusting d_{k+1} rows and d_{k-1} columns; f0 shrinks when k == 1.
// Returns false if d_k has no unit entry.
bool prune_once(std::vector<GradedMatrix>& chain, GradedFreeModule& f0, size_t k) {
  GradedMatrix& m = chain[k - 1];
  const RingPtr& ring = m.ring();
  const Fq& fq = *ring->field();
  int s = -1, t = -1;
  for (int i = 0; i < m.rows() && s < 0; ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& f = m.entry(i, j);
      if (!f.is_zero() && f.degree() == 0) {
        s = i;
        t = j;
        break;
      }
    }
  if (s < 0) return false;

  FqElem c = m.entry(s, t).leading_term().coef;
  FqElem cinv = fq.inv(c);

  // Clear row s by column operations; mirror as row operations on d_{k+1}.
  for (int j = 0; j < m.cols(); ++j) {
    if (j == t) continue;
    const Poly v = m.entry(s, j);
    if (v.is_zero()) continue;
    Poly lambda = v.scaled(cinv);
    for (int i = 0; i < m.rows(); ++i) {
      const Poly& mit = m.entry(i, t);
      if (mit.is_zero()) continue;
      m.set_entry(i, j, m.entry(i, j) - lambda * mit);
    }
    if (k < chain.size()) {
      GradedMatrix& next = chain[k];
      for (int u = 0; u < next.cols(); ++u) {
        const Poly& nju = next.entry(j, u);
        if (nju.is_zero()) continue;
        next.set_entry(t, u, next.entry(t, u) + lambda * nju);
      }
    }
  }
  // Row s is now c at (s, t) and zero elsewhere; clear column t and mirror as
  // column operations on d_{k-1}.
  for (int i = 0; i < m.rows(); ++i) {
    if (i == s) continue;
    const Poly w = m.entry(i, t);
    if (w.is_zero()) continue;
    Poly mu = w.scaled(cinv);
    m.set_entry(i, t, Poly::zero(ring));
    if (k >= 2) {
      GradedMatrix& prev = chain[k - 2];
      for (int u = 0; u < prev.rows(); ++u) {
        const Poly& pui = prev.entry(u, i);
        if (pui.is_zero()) continue;
        prev.set_entry(u, s, prev.entry(u, s) + mu * pui);
      }
    }
  }

  // The mirrored operations must have zeroed the mirrored row and column;
  // both facts follow from d o d = 0.
  if (k < chain.size()) {
    GradedMatrix& next = chain[k];
    for (int u = 0; u < next.cols(); ++u)
      if (!next.entry(t, u).is_zero())
        throw std::logic_error("pruning left a nonzero row in the next differential");
    next = delete_row(next, t);
  }
  if (k >= 2) {
    GradedMatrix& prev = chain[k - 2];
    for (int u = 0; u < prev.rows(); ++u)
      if (!prev.entry(u, s).is_zero())
        throw std::logic_error("pruning left a nonzero column in the previous differential");
    prev = delete_col(prev, s);
  } else {
    GradedFreeModule nf0;
    for (int i = 0; i < static_cast<int>(f0.twists.size()); ++i)
      if (i != s) nf0.twists.push_back(f0.twists[static_cast<size_t>(i)]);
    f0 = nf0;
  }
  m = delete_col(delete_row(m, s), t);
  return true;
}

void prune_level(std::vector<GradedMatrix>& chain, GradedFreeModule& f0, size_t k) {
  while (prune_once(chain, f0, k)) {
  }
}

FreeResolution resolve_chain(const RingPtr& ring, GradedFreeModule f0, GradedMatrix d1,
                             int length, bool prune, const Budget* budget) {
  if (length < 1) throw std::invalid_argument("resolution length must be >= 1");
  FreeResolution res;
  res.ring = ring;
  std::vector<GradedMatrix> chain;
  chain.push_back(std::move(d1));
  if (prune) prune_level(chain, f0, 1);
  while (static_cast<int>(chain.size()) < length) {
    if (budget) budget->check("free resolution");
    if (chain.back().cols() == 0) {
      res.complete = true;
      break;
    }
    GradedMatrix next = syzygies(chain.back(), budget);
    chain.push_back(std::move(next));
    if (prune) prune_level(chain, f0, chain.size());
    // Pruning can empty the level it just minimized, so test afterwards.
    if (chain.back().cols() == 0) {
      res.complete = true;
      chain.pop_back();
      break;
    }
  }
  if (!res.complete && !chain.empty() && chain.back().cols() == 0) res.complete = true;
  // A pruned chain is minimal, so Hilbert's syzygy theorem caps its length at
  // nvars: reaching that length means the last kernel is zero.
  if (!res.complete && prune && static_cast<int>(chain.size()) >= ring->nvars())
    res.complete = true;
  res.f0 = std::move(f0);
  res.diffs = std::move(chain);
  return res;
}

}  // namespace

FreeResolution free_resolution(const Ideal& ideal, int length, bool prune,
                               const Budget* budget) {
  const RingPtr& ring = ideal.ring();
  GradedFreeModule f0{{0}};
  GradedFreeModule src;
  std::vector<const Poly*> gens;
  for (const auto& g : ideal.gens()) {
    if (g.is_zero()) continue;
    src.twists.push_back(g.degree());
    gens.push_back(&g);
  }
  GradedMatrix d1(ring, f0, src);
  for (size_t j = 0; j < gens.size(); ++j) d1.set_entry(0, static_cast<int>(j), *gens[j]);
  return resolve_chain(ring, f0, std::move(d1), length, prune, budget);
}

FreeResolution resolve_presentation(const GradedMatrix& d1, int length, bool prune,
                                    const Budget* budget) {
  return resolve_chain(d1.ring(), d1.target(), d1, length, prune, budget);
}

GradedMatrix dual_delta(const FreeResolution& res, int i) {
  if (i < 0) throw std::out_of_range("dual differential index");
  return res.diff(i + 1).transpose_dual();
}

std::vector<GradedMatrix> dualize(const FreeResolution& res) {
  std::vector<GradedMatrix> out;
  out.reserve(static_cast<size_t>(res.length()));
  for (int i = 0; i < res.length(); ++i) out.push_back(dual_delta(res, i));
  return out;
}

bool resolution_dd_zero(const FreeResolution& res) {
  for (int i = 1; i < res.length(); ++i)
    if (!res.diff(i).compose(res.diff(i + 1)).is_zero()) return false;
  return true;
}

bool resolution_exact_at(const FreeResolution& res, int i, int degree) {
  if (i < 1) throw std::out_of_range("exactness index");
  if (i > res.length() || (i == res.length() && !res.complete))
    throw std::out_of_range("exactness index beyond the computed chain");
  PieceBasis bprev = PieceBasis::make(res.ring, res.module(i - 1), degree);
  PieceBasis bi = PieceBasis::make(res.ring, res.module(i), degree);
  PieceBasis bnext = PieceBasis::make(res.ring, res.module(i + 1), degree);
  int rank_i = piece_matrix(res.diff(i), bi, bprev).rank();
  int rank_next = piece_matrix(res.diff(i + 1), bnext, bi).rank();
  return rank_next == bi.dim() - rank_i;
}

ExtPiece::ExtPiece(const FreeResolution& res, int i, int degree)
    : field_(res.ring->field()), i_(i), degree_(degree) {
  if (i < 0) throw std::out_of_range("homological index must be >= 0");
  if (i + 1 > res.length() && !res.complete)
    throw std::logic_error("resolution too short for the requested Ext");
  GradedFreeModule di = res.module(i).dual();
  GradedFreeModule dnext = res.module(i + 1).dual();
  basis_ = PieceBasis::make(res.ring, di, degree);
  PieceBasis bnext = PieceBasis::make(res.ring, dnext, degree);
  cocycle_mat_ = piece_matrix(dual_delta(res, i), basis_, bnext);

  if (i >= 1) {
    GradedFreeModule dprev = res.module(i - 1).dual();
    PieceBasis bprev = PieceBasis::make(res.ring, dprev, degree);
    MatFq im = piece_matrix(dual_delta(res, i - 1), bprev, basis_);
    for (int j = 0; j < im.cols(); ++j) {
      FqVec col(static_cast<size_t>(im.rows()));
      for (int r = 0; r < im.rows(); ++r) col[static_cast<size_t>(r)] = im.at(r, j);
      insert(std::move(col), false);
    }
  }
  MatFq ker = cocycle_mat_.kernel_basis();
  for (int j = 0; j < ker.cols(); ++j) {
    FqVec col(static_cast<size_t>(ker.rows()));
    for (int r = 0; r < ker.rows(); ++r) col[static_cast<size_t>(r)] = ker.at(r, j);
    insert(std::move(col), true);
  }
  for (const auto& row : rows_)
    if (row.rep_slot >= 0) reps_[static_cast<size_t>(row.rep_slot)] = row.v;
}

bool ExtPiece::insert(FqVec v, bool is_rep) {
  const Fq& fq = *field_;
  for (const auto& row : rows_) {
    FqElem c = v[static_cast<size_t>(row.pivot)];
    if (fq.is_zero(c)) continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = fq.sub(v[j], fq.mul(c, row.v[j]));
  }
  int pivot = -1;
  for (size_t j = 0; j < v.size(); ++j)
    if (!fq.is_zero(v[j])) {
      pivot = static_cast<int>(j);
      break;
    }
  if (pivot < 0) return false;
  FqElem inv = fq.inv(v[static_cast<size_t>(pivot)]);
  for (auto& x : v) x = fq.mul(x, inv);
  for (auto& row : rows_) {
    FqElem c = row.v[static_cast<size_t>(pivot)];
    if (fq.is_zero(c)) continue;
    for (size_t j = 0; j < v.size(); ++j)
      row.v[j] = fq.sub(row.v[j], fq.mul(c, v[j]));
  }
  int slot = -1;
  if (is_rep) {
    slot = static_cast<int>(reps_.size());
    reps_.emplace_back();  // filled in after all insertions
  }
  rows_.push_back(Row{pivot, std::move(v), slot});
  return true;
}

bool ExtPiece::is_cocycle(const FqVec& v) const {
  FqVec image = cocycle_mat_.apply(v);
  for (const auto& x : image)
    if (!field_->is_zero(x)) return false;
  return true;
}

FqVec ExtPiece::homology_coords(const FqVec& v) const {
  const Fq& fq = *field_;
  if (static_cast<int>(v.size()) != basis_.dim())
    throw std::invalid_argument("coordinate length mismatch");
  FqVec residue = v;
  FqVec coords(reps_.size(), fq.zero());
  for (const auto& row : rows_) {
    FqElem c = residue[static_cast<size_t>(row.pivot)];
    if (fq.is_zero(c)) continue;
    for (size_t j = 0; j < residue.size(); ++j)
      residue[j] = fq.sub(residue[j], fq.mul(c, row.v[j]));
    if (row.rep_slot >= 0) coords[static_cast<size_t>(row.rep_slot)] = c;
  }
  for (const auto& x : residue)
    if (!fq.is_zero(x))
      throw std::invalid_argument("vector is not a cocycle modulo the image");
  return coords;
}

ExtPiece ext_graded_piece(const FreeResolution& res, int i, int degree) {
  return ExtPiece(res, i, degree);
}

ExtPiece ext_graded_piece(const Ideal& ideal, int i, int degree, const Budget* budget) {
  int n1 = ideal.ring()->nvars();
  if (i < 0 || i > n1)
    throw std::out_of_range("homological index out of range [0, " + std::to_string(n1) + "]");
  FreeResolution res = free_resolution(ideal, i + 1, /*prune=*/true, budget);
  return ExtPiece(res, i, degree);
}

PresentedModule present_homology(const FreeResolution& res, int i, const Budget* budget) {
  if (i < 0) throw std::out_of_range("homological index must be >= 0");
  if (i + 1 > res.length() && !res.complete)
    throw std::logic_error("resolution too short for the requested homology");
  GradedMatrix delta_i = dual_delta(res, i);
  ColumnBasis kernel(delta_i, budget);
  const GradedMatrix& k = kernel.syzygy_matrix();  // generators of ker(delta_i)
  ColumnBasis kcols(k, budget);

  std::vector<std::vector<Poly>> relation_cols;
  std::vector<int> relation_twists;
  if (i >= 1) {
    GradedMatrix delta_prev = dual_delta(res, i - 1);
    for (int u = 0; u < delta_prev.cols(); ++u) {
      auto div = kcols.divide(delta_prev.column(u));
      for (const auto& r : div.remainder)
        if (!r.is_zero())
          throw std::logic_error("coboundary is not in the kernel span");
      relation_cols.push_back(div.quotient);
      relation_twists.push_back(delta_prev.source().twists[static_cast<size_t>(u)]);
    }
  }
  const GradedMatrix& ksyz = kcols.syzygy_matrix();
  for (int u = 0; u < ksyz.cols(); ++u) {
    relation_cols.push_back(ksyz.column(u));
    relation_twists.push_back(ksyz.source().twists[static_cast<size_t>(u)]);
  }

  GradedFreeModule src{relation_twists};
  GradedMatrix pres(res.ring, k.source(), src);
  for (size_t u = 0; u < relation_cols.size(); ++u)
    for (int g = 0; g < k.source().rank(); ++g)
      pres.set_entry(g, static_cast<int>(u), relation_cols[u][static_cast<size_t>(g)]);
  return minimalize(PresentedModule{std::move(pres)});
}

PresentedModule minimalize(const PresentedModule& m) {
  std::vector<GradedMatrix> chain{m.presentation};
  GradedFreeModule f0 = m.presentation.target();
  prune_level(chain, f0, 1);
  return PresentedModule{std::move(chain[0])};
}

HilbertSeries hilbert_series(const PresentedModule& m, const Budget* budget) {
  const RingPtr& ring = m.presentation.ring();
  FreeResolution res =
      resolve_presentation(m.presentation, ring->nvars() + 2, /*prune=*/true, budget);
  if (!res.complete)
    throw std::logic_error("free resolution exceeds the global dimension");
  HilbertSeries h;
  h.denominator_power = ring->nvars();
  auto addterms = [&h](const GradedFreeModule& f, long long sign) {
    for (int a : f.twists) {
      h.numerator[a] += sign;
      if (h.numerator[a] == 0) h.numerator.erase(a);
    }
  };
  addterms(res.f0, 1);
  for (int i = 1; i <= res.length(); ++i) addterms(res.module(i), i % 2 ? -1 : 1);
  return h;
}

long long hilbert_coefficient(const HilbertSeries& h, int degree) {
  // Coefficient of t^degree in numerator / (1-t)^m via the binomial series.
  long long total = 0;
  int m = h.denominator_power;
  for (const auto& [a, c] : h.numerator) {
    int k = degree - a;
    if (k < 0) continue;
    // C(k + m - 1, m - 1)
    long long binom = 1;
    for (int r = 1; r <= m - 1; ++r) binom = binom * (k + r) / r;
    total += c * (m == 0 ? (k == 0 ? 1 : 0) : binom);
  }
  return total;
}

int graded_dim(const PresentedModule& m, int degree) {
  const RingPtr& ring = m.presentation.ring();
  PieceBasis target = PieceBasis::make(ring, m.presentation.target(), degree);
  PieceBasis source = PieceBasis::make(ring, m.presentation.source(), degree);
  MatFq piece = piece_matrix(m.presentation, source, target);
  return target.dim() - piece.rank();
}

bool is_finite_length(const PresentedModule& m, const Budget* budget) {
  HilbertSeries h = hilbert_series(m, budget);
  if (h.numerator.empty()) return true;
  // Divide the numerator by (1-t) denominator_power times; each step must be
  // exact (numerator vanishes at t = 1).
  int lo = h.numerator.begin()->first;
  int hi = h.numerator.rbegin()->first;
  std::vector<long long> c(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& [a, v] : h.numerator) c[static_cast<size_t>(a - lo)] = v;
  for (int step = 0; step < h.denominator_power; ++step) {
    long long total = 0;
    for (long long v : c) total += v;
    if (total != 0) return false;
    // (1-t) * s = c with s_k = sum_{j<=k} c_j; the last prefix sum is 0.
    long long acc = 0;
    for (auto& v : c) {
      acc += v;
      v = acc;
    }
    if (c.back() != 0) return false;
    c.pop_back();
    if (c.empty()) return true;
  }
  return true;
}

bool is_zero_module(const PresentedModule& m) {
  return minimalize(m).presentation.target().rank() == 0;
}

}  // namespace fmodlen
