// SPDX-License-Identifier: Apache-2.0
#include "intmult/multiplicity.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace intmult {

std::size_t split_rank_formula(const PersistenceModule& m, const SplitMorphism& g) {
  const std::size_t full = rank(evaluate(m, g.g));
  const std::size_t r1 = rank(evaluate(m, g.g1()));
  const std::size_t r2 = rank(evaluate(m, g.g2()));
  if (full < r1 + r2) throw std::logic_error("rank formula produced a negative multiplicity");
  return full - r1 - r2;
}

std::size_t interval_multiplicity(const PersistenceModule& m, const PresentationData& pd) {
  if (!m.poset()->same_order(*pd.interval.poset())) throw PosetMismatch("interval and module live on different posets");
  return split_rank_formula(m, assemble_g(pd));
}

std::size_t interval_multiplicity(const PersistenceModule& m, const Interval& i) {
  return interval_multiplicity(m, build_presentation(i));
}

std::size_t interval_multiplicity_injective(const PersistenceModule& m, const Interval& i) {
  PresentationData pd = build_presentation(i);
  FormalMorphism ext = epsilon1_injective_extension(pd);
  return rank(evaluate(m, ext)) - rank(evaluate(m, epsilon1(pd)));
}

std::size_t dim_hom(const FormalMorphism& mu, const PersistenceModule& m) {
  std::size_t total = 0;
  for (auto x : mu.col_objects()) total += m.dim(x);
  return total - rank(evaluate(m, mu));
}

std::size_t one_parameter_multiplicity(const PersistenceModule& m, Element s, Element t) {
  const Poset& p = *m.poset();
  if (!p.is_chain()) throw NotAChain("one-parameter formula needs a totally ordered poset");
  if (!p.leq(s, t)) throw InvalidInterval("segment endpoints are not ordered");
  const ElementList& order = p.linear_extension();
  const std::size_t si = std::find(order.begin(), order.end(), s) - order.begin();
  const std::size_t ti = std::find(order.begin(), order.end(), t) - order.begin();
  auto r = [&](std::size_t a, std::size_t b) { return static_cast<long long>(rank(m.structure_map(order[a], order[b]))); };
  const bool has_prev = si > 0, has_next = ti + 1 < order.size();
  long long v = r(si, ti);
  if (has_prev) v -= r(si - 1, ti);
  if (has_next) v -= r(si, ti + 1);
  if (has_prev && has_next) v += r(si - 1, ti + 1);
  if (v < 0) throw std::logic_error("negative one-parameter multiplicity");
  return static_cast<std::size_t>(v);
}

Diagram maximal_interval_summand(const PersistenceModule& m, std::size_t jobs) {
  std::vector<Interval> intervals = enumerate_intervals(m.poset());
  std::vector<std::size_t> mult(intervals.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t k; (k = next++) < intervals.size() && !failed;) mult[k] = interval_multiplicity(m, intervals[k]);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Diagram d;
  d.accounted.assign(m.poset()->size(), 0);
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (mult[k] == 0) continue;
    for (auto x : intervals[k].members()) d.accounted[x] += mult[k];
    d.entries.push_back({intervals[k], mult[k]});
  }
  std::stable_sort(d.entries.begin(), d.entries.end(), [](const DiagramEntry& a, const DiagramEntry& b) {
    if (a.interval.size() != b.interval.size()) return a.interval.size() < b.interval.size();
    return a.interval < b.interval;
  });
  d.decomposable = d.accounted == m.dims();
  return d;
}

DecomposabilityReport is_interval_decomposable(const PersistenceModule& m, std::size_t jobs) {
  DecomposabilityReport rep;
  rep.diagram = maximal_interval_summand(m, jobs);
  rep.total_dim = m.total_dim();
  for (auto a : rep.diagram.accounted) rep.total_accounted += a;
  for (std::size_t x = 0; x < m.dims().size(); ++x)
    if (rep.diagram.accounted[x] > m.dim(x))
      throw std::logic_error("interval summands account for more than dim M at " + m.poset()->label(x));
  rep.decomposable = rep.total_accounted == rep.total_dim;
  rep.dimension_vectors_match = rep.diagram.accounted == m.dims();
  if (rep.decomposable != rep.dimension_vectors_match)
    throw std::logic_error("total-dimension and dimension-vector criteria disagree");
  return rep;
}

std::vector<std::vector<DenseMatrix>> hom_basis(const PersistenceModule& n, const PersistenceModule& m) {
  if (!n.poset()->same_order(*m.poset())) throw PosetMismatch("Hom between modules over different posets");
  const Poset& p = *m.poset();
  const Field f = m.field();
  std::vector<std::size_t> off(p.size() + 1, 0);
  for (std::size_t x = 0; x < p.size(); ++x) off[x + 1] = off[x] + m.dim(x) * n.dim(x);
  const std::size_t unknowns = off.back();

  std::size_t eqs = 0;
  for (auto [x, y] : p.hasse_arrows()) eqs += m.dim(y) * n.dim(x);
  DenseMatrix sys(f, eqs, unknowns);
  std::size_t row = 0;
  for (auto [x, y] : p.hasse_arrows()) {
    const DenseMatrix& my = m.arrow_map(x, y);
    const DenseMatrix& ny = n.arrow_map(x, y);
    for (std::size_t r = 0; r < m.dim(y); ++r)
      for (std::size_t c = 0; c < n.dim(x); ++c, ++row) {
        // (M_yx F_x)[r][c] - (F_y N_yx)[r][c] = 0
        for (std::size_t k = 0; k < m.dim(x); ++k)
          sys.set(row, off[x] + k * n.dim(x) + c, sys.at(row, off[x] + k * n.dim(x) + c) + my.at(r, k));
        for (std::size_t k = 0; k < n.dim(y); ++k)
          sys.set(row, off[y] + r * n.dim(y) + k, sys.at(row, off[y] + r * n.dim(y) + k) - ny.at(k, c));
      }
  }
  DenseMatrix ker = nullspace(sys);
  std::vector<std::vector<DenseMatrix>> basis;
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    std::vector<DenseMatrix> comp;
    for (std::size_t x = 0; x < p.size(); ++x) {
      DenseMatrix fx(f, m.dim(x), n.dim(x));
      for (std::size_t r = 0; r < m.dim(x); ++r)
        for (std::size_t c = 0; c < n.dim(x); ++c) fx.set(r, c, ker.at(off[x] + r * n.dim(x) + c, b));
      comp.push_back(std::move(fx));
    }
    basis.push_back(std::move(comp));
  }
  return basis;
}

std::size_t oracle_multiplicity(const PersistenceModule& m, const Interval& i) {
  PersistenceModule v = interval_module(i, m.field());
  auto into = hom_basis(v, m);
  auto out = hom_basis(m, v);
  const Element x0 = i.members().front();
  DenseMatrix pairing(m.field(), into.size(), out.size());
  for (std::size_t a = 0; a < into.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b) pairing.set(a, b, (out[b][x0] * into[a][x0]).at(0, 0));
  return rank(pairing);
}

} // namespace intmult
