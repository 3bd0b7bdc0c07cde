// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures and generators for the test binaries, plus a small
// self-contained oracle that does not use the library's linear algebra.

#pragma once

#include "intmult/bipath.hpp"
#include "intmult/errors.hpp"
#include "intmult/grid.hpp"
#include "intmult/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace testing_support {

using namespace intmult;

// ---------------------------------------------------------------------------
// Independent GF(p) oracle
// ---------------------------------------------------------------------------

using Rows = std::vector<std::vector<long long>>;

inline long long pmod(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline long long pinv(long long a, long long p) {
  long long r = 1, e = p - 2;
  a = pmod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Gauss-Jordan in place; returns pivot columns.
inline std::vector<std::size_t> plain_rref(Rows& a, std::size_t cols, long long p) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t k = r;
    while (k < a.size() && pmod(a[k][c], p) == 0) ++k;
    if (k == a.size()) continue;
    std::swap(a[k], a[r]);
    const long long inv = pinv(a[r][c], p);
    for (auto& v : a[r]) v = pmod(v * inv, p);
    for (std::size_t o = 0; o < a.size(); ++o) {
      if (o == r || a[o][c] == 0) continue;
      const long long f = a[o][c];
      for (std::size_t j = 0; j < cols; ++j) a[o][j] = pmod(a[o][j] - f * a[r][j], p);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t plain_rank(Rows a, std::size_t cols, long long p) { return plain_rref(a, cols, p).size(); }

/// Basis of {v : a v = 0}, as a list of vectors.
inline Rows plain_kernel(Rows a, std::size_t cols, long long p) {
  auto piv = plain_rref(a, cols, p);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  Rows out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<long long> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = pmod(-a[r][f], p);
    out.push_back(v);
  }
  return out;
}

inline long long entry(const DenseMatrix& m, std::size_t r, std::size_t c) { return m.at(r, c).residue(); }

/// Multiplicity of V_I in M as the rank of the composition pairing
/// Hom(V_I, M) x Hom(M, V_I) -> k, built from scratch over GF(p).
inline std::size_t reference_multiplicity(const PersistenceModule& m, const Interval& i) {
  const Poset& p = *m.poset();
  const long long q = m.field().characteristic();
  if (q == 0) throw std::invalid_argument("reference oracle needs a prime field");
  std::vector<std::size_t> off(p.size() + 1, 0);
  for (Element x = 0; x < p.size(); ++x) off[x + 1] = off[x] + (i.contains(x) ? m.dim(x) : 0);
  const std::size_t n = off.back();

  // phi: one vector phi_x in M(x) per member x. Unknowns are stacked.
  Rows eq_in, eq_out;
  for (auto [x, y] : p.hasse_arrows()) {
    const bool ix = i.contains(x), iy = i.contains(y);
    if (!ix && !iy) continue;
    const DenseMatrix& a = m.arrow_map(x, y);
    if (ix) {
      // M_{y,x} phi_x - [y in I] phi_y = 0
      for (std::size_t r = 0; r < m.dim(y); ++r) {
        std::vector<long long> row(n, 0);
        for (std::size_t c = 0; c < m.dim(x); ++c) row[off[x] + c] = entry(a, r, c);
        if (iy) row[off[y] + r] = pmod(row[off[y] + r] - 1, q);
        eq_in.push_back(row);
      }
    }
    if (iy) {
      // psi_y M_{y,x} - [x in I] psi_x = 0
      for (std::size_t c = 0; c < m.dim(x); ++c) {
        std::vector<long long> row(n, 0);
        for (std::size_t r = 0; r < m.dim(y); ++r) row[off[y] + r] = entry(a, r, c);
        if (ix) row[off[x] + c] = pmod(row[off[x] + c] - 1, q);
        eq_out.push_back(row);
      }
    }
  }
  Rows phis = plain_kernel(eq_in, n, q);
  Rows psis = plain_kernel(eq_out, n, q);
  const Element x0 = i.members().front();
  Rows pairing;
  for (const auto& phi : phis) {
    std::vector<long long> row;
    for (const auto& psi : psis) {
      long long s = 0;
      for (std::size_t k = 0; k < m.dim(x0); ++k) s += phi[off[x0] + k] * psi[off[x0] + k];
      row.push_back(pmod(s, q));
    }
    pairing.push_back(row);
  }
  return plain_rank(pairing, psis.size(), q);
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// Connected random poset on n elements: a random spanning tree plus extra
/// comparabilities, all oriented along a random relabelling.
inline PosetPtr random_poset(std::mt19937& rng, std::size_t n, double density = 0.3) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution extra(density);
  std::vector<Arrow> edges;
  for (std::size_t j = 1; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, j - 1);
    edges.emplace_back(perm[pick(rng)], perm[j]);
    for (std::size_t k = 0; k < j; ++k)
      if (extra(rng)) edges.emplace_back(perm[k], perm[j]);
  }
  return std::make_shared<const Poset>(Poset::from_hasse(n, edges));
}

/// Image of a random morphism from a sum of projectives to a sum of
/// injectives. Dimensions are capped at `max_dim`; generic enough to produce
/// indecomposables that are not intervals.
inline PersistenceModule random_image_module(std::mt19937& rng, const PosetPtr& p, Field field, std::size_t max_dim = 3,
                                             std::size_t max_summands = 5) {
  const Poset& P = *p;
  const long long q = field.is_prime() ? field.characteristic() : 7;
  std::uniform_int_distribution<std::size_t> count(1, max_summands);
  std::uniform_int_distribution<long long> coef(0, q - 1);
  // Generators lean towards the bottom of a linear extension and cogenerators
  // towards the top, so supports are large and summands overlap.
  const ElementList& topo = P.linear_extension();
  std::geometric_distribution<std::size_t> depth(0.45);
  auto low = [&] { return topo[std::min(depth(rng), topo.size() - 1)]; };
  auto high = [&] { return topo[topo.size() - 1 - std::min(depth(rng), topo.size() - 1)]; };
  for (;;) {
    const std::size_t np = count(rng), ni = count(rng);
    std::vector<Element> xs(np), zs(ni);
    for (auto& x : xs) x = low();
    for (auto& z : zs) z = high();
    std::vector<std::vector<long long>> c(ni, std::vector<long long>(np, 0));
    for (std::size_t j = 0; j < ni; ++j)
      for (std::size_t i = 0; i < np; ++i)
        if (P.leq(xs[i], zs[j])) c[j][i] = coef(rng) - (field.is_rational() ? q / 2 : 0);

    std::vector<DenseMatrix> basis(P.size());
    std::vector<std::vector<std::size_t>> live_rows(P.size());
    std::vector<std::size_t> dims(P.size());
    bool ok = true;
    for (Element y = 0; y < P.size() && ok; ++y) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < ni; ++j)
        if (P.leq(y, zs[j])) live_rows[y].push_back(j);
      for (std::size_t i = 0; i < np; ++i)
        if (P.leq(xs[i], y)) cols.push_back(i);
      DenseMatrix f(field, live_rows[y].size(), cols.size());
      for (std::size_t r = 0; r < live_rows[y].size(); ++r)
        for (std::size_t k = 0; k < cols.size(); ++k) f.set(r, k, c[live_rows[y][r]][cols[k]]);
      auto piv = row_reduce(f).pivots;
      basis[y] = f.select_cols(piv);
      dims[y] = piv.size();
      ok = dims[y] <= max_dim;
    }
    if (!ok) continue;
    std::map<Arrow, DenseMatrix> maps;
    for (auto [x, y] : P.hasse_arrows()) {
      if (dims[x] == 0 || dims[y] == 0) continue;
      std::vector<std::size_t> keep;
      for (std::size_t r = 0; r < live_rows[x].size(); ++r)
        if (std::find(live_rows[y].begin(), live_rows[y].end(), live_rows[x][r]) != live_rows[y].end())
          keep.push_back(r);
      auto coords = solve(basis[y], basis[x].select_rows(keep));
      maps.emplace(Arrow{x, y}, *coords);
    }
    return PersistenceModule(p, field, dims, maps);
  }
}

/// Cokernel of a random morphism between sums of projectives: generators at
/// low elements, relations at elements above some of them.
inline PersistenceModule random_presented_module(std::mt19937& rng, const PosetPtr& p, Field field,
                                                 std::size_t max_dim = 3) {
  const Poset& P = *p;
  const long long q = field.is_prime() ? field.characteristic() : 7;
  const ElementList& topo = P.linear_extension();
  std::geometric_distribution<std::size_t> depth(0.35);
  std::uniform_int_distribution<Element> any(0, P.size() - 1);
  std::uniform_int_distribution<std::size_t> ngen(1, 6), nrel(0, 6);
  std::uniform_int_distribution<long long> coef(0, q - 1);
  for (;;) {
    std::vector<Element> gens(ngen(rng)), rels(nrel(rng));
    for (auto& x : gens) x = topo[std::min(depth(rng), topo.size() - 1)];
    for (auto& r : rels) r = any(rng);
    std::vector<std::vector<long long>> c(rels.size(), std::vector<long long>(gens.size(), 0));
    for (std::size_t j = 0; j < rels.size(); ++j)
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (P.leq(gens[i], rels[j])) c[j][i] = coef(rng) - (field.is_rational() ? q / 2 : 0);

    std::vector<std::vector<std::size_t>> live(P.size());
    std::vector<DenseMatrix> quot(P.size()), lift(P.size());
    std::vector<std::size_t> dims(P.size());
    bool ok = true;
    for (Element y = 0; y < P.size() && ok; ++y) {
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (P.leq(gens[i], y)) live[y].push_back(i);
      std::vector<std::size_t> rs;
      for (std::size_t j = 0; j < rels.size(); ++j)
        if (P.leq(rels[j], y)) rs.push_back(j);
      DenseMatrix r(field, live[y].size(), rs.size());
      for (std::size_t a = 0; a < live[y].size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) r.set(a, b, c[rs[b]][live[y][a]]);
      quot[y] = left_nullspace(r);
      dims[y] = quot[y].rows();
      ok = dims[y] <= max_dim;
      if (ok && dims[y] > 0) lift[y] = *solve(quot[y], DenseMatrix::identity(field, dims[y]));
    }
    if (!ok) continue;
    std::map<Arrow, DenseMatrix> maps;
    for (auto [x, y] : P.hasse_arrows()) {
      if (dims[x] == 0 || dims[y] == 0) continue;
      DenseMatrix incl(field, live[y].size(), live[x].size());
      for (std::size_t a = 0; a < live[x].size(); ++a) {
        auto at = std::find(live[y].begin(), live[y].end(), live[x][a]);
        incl.set(static_cast<std::size_t>(at - live[y].begin()), a, 1);
      }
      maps.emplace(Arrow{x, y}, quot[y] * incl * lift[x]);
    }
    return PersistenceModule(p, field, dims, maps);
  }
}

inline bool hasse_is_tree(const Poset& p) { return p.hasse_arrows().size() + 1 == p.size(); }

/// Arbitrary matrices on a tree-shaped Hasse quiver, which has no squares to
/// commute. Dimensions are uniform in [1, max_dim].
inline PersistenceModule random_tree_module(std::mt19937& rng, const PosetPtr& p, Field field, std::size_t max_dim = 3) {
  const long long q = field.is_prime() ? field.characteristic() : 5;
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long long> coef(0, q - 1);
  std::vector<std::size_t> dims(p->size());
  for (auto& d : dims) d = dim(rng);
  std::map<Arrow, DenseMatrix> maps;
  for (auto [x, y] : p->hasse_arrows()) {
    if (dims[x] == 0 || dims[y] == 0) continue;
    DenseMatrix a(field, dims[y], dims[x]);
    for (std::size_t r = 0; r < dims[y]; ++r)
      for (std::size_t c = 0; c < dims[x]; ++c) a.set(r, c, coef(rng) - (field.is_rational() ? q / 2 : 0));
    maps.emplace(Arrow{x, y}, a);
  }
  return PersistenceModule(p, field, dims, maps);
}

/// One of the constructions above, chosen at random; tree-shaped posets use
/// free matrices half of the time.
inline PersistenceModule random_module(std::mt19937& rng, const PosetPtr& p, Field field, std::size_t max_dim = 3) {
  std::uniform_int_distribution<int> kind(0, hasse_is_tree(*p) ? 3 : 1);
  switch (kind(rng)) {
  case 0:
    return random_presented_module(rng, p, field, max_dim);
  case 1:
    return random_image_module(rng, p, field, max_dim);
  default:
    return random_tree_module(rng, p, field, max_dim);
  }
}

// ---------------------------------------------------------------------------
// Literal fixtures
// ---------------------------------------------------------------------------

inline DenseMatrix mat(Field f, const Rows& rows) { return DenseMatrix::from_rows(f, rows); }

/// Builds a module from (source label, target label, matrix) triples.
struct MapSpec {
  const char* from;
  const char* to;
  Rows rows;
};

inline PersistenceModule module_of(const PosetPtr& p, Field f, const std::vector<std::size_t>& dims,
                                   const std::vector<MapSpec>& specs) {
  std::map<Arrow, DenseMatrix> maps;
  for (const auto& s : specs) {
    const Element x = *p->find(s.from), y = *p->find(s.to);
    maps.emplace(Arrow{x, y}, s.rows.empty() ? DenseMatrix(f, dims[y], dims[x]) : mat(f, s.rows));
  }
  return PersistenceModule(p, f, dims, maps);
}

inline Interval interval_of(const PosetPtr& p, const std::vector<const char*>& labels) {
  ElementList members;
  for (auto l : labels) members.push_back(*p->find(l));
  return Interval(p, members);
}

/// The G_{4,2} module of the grid worked example; `variant` switches the two
/// maps into 4' that make the multiplicity drop from 2 to 1.
inline PersistenceModule grid_example(Field f, bool variant) {
  auto p = make_grid(4, 2);
  // Index order: 1 2 3 4 1' 2' 3' 4'.
  std::vector<std::size_t> dims{1, 3, 3, 3, 2, 2, 2, 1};
  std::vector<MapSpec> specs{
      {"1'", "2'", {{1, 0}, {0, 1}}},
      {"2'", "3'", {{1, 0}, {0, 1}}},
      {"3'", "4'", variant ? Rows{{1, 0}} : Rows{{0, 0}}},
      {"1", "1'", {{0}, {0}}},
      {"2", "2'", {{1, 0, 0}, {0, 1, 0}}},
      {"3", "3'", {{1, 0, 0}, {0, 1, 0}}},
      {"4", "4'", variant ? Rows{{1, 0, 0}} : Rows{{0, 0, 0}}},
      {"1", "2", {{0}, {0}, {1}}},
      {"2", "3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      {"3", "4", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
  };
  return module_of(p, f, dims, specs);
}

inline Interval grid_example_interval(const PosetPtr& p) { return interval_of(p, {"2", "3", "4", "1'", "2'", "3'"}); }

/// D4-type poset 1 -> 2 <- 4, 2 -> 3 (labels "1".."4", indices 0..3).
inline PosetPtr d4_sink_poset() {
  return std::make_shared<const Poset>(Poset::from_hasse(4, {{0, 1}, {3, 1}, {1, 2}}, {"1", "2", "3", "4"}));
}

/// D4-type poset with 2 as the unique source: 2 -> 1, 2 -> 3, 2 -> 4.
inline PosetPtr d4_source_poset() {
  return std::make_shared<const Poset>(Poset::from_hasse(4, {{1, 0}, {1, 2}, {1, 3}}, {"1", "2", "3", "4"}));
}

inline PersistenceModule d4_module(Field f, int which) {
  auto p = d4_sink_poset();
  if (which == 1)
    return module_of(p, f, {1, 2, 1, 1}, {{"4", "2", {{1}, {1}}}, {"1", "2", {{1}, {1}}}, {"2", "3", {{1, 0}}}});
  return module_of(p, f, {1, 2, 1, 1}, {{"4", "2", {{1}, {0}}}, {"1", "2", {{0}, {1}}}, {"2", "3", {{1, 1}}}});
}

inline PersistenceModule d4_source_module(Field f) {
  auto p = d4_source_poset();
  return module_of(p, f, {1, 3, 2, 1},
                   {{"2", "4", {{1, 0, 0}}}, {"2", "1", {{1, 0, 0}}}, {"2", "3", {{1, 0, 0}, {0, 1, 1}}}});
}

/// The folded zigzag 2 -> 3 <- 2' -> 1 <- 2'' -> 4 and its map onto the
/// source-centred D4 poset.
inline OrderMap folded_zigzag(const PosetPtr& p) {
  auto z = std::make_shared<const Poset>(
      Poset::from_hasse(6, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}}, {"2", "3", "2'", "1", "2''", "4"}));
  auto e = [&](const char* l) { return *p->find(l); };
  return OrderMap(z, p, {e("2"), e("3"), e("2"), e("1"), e("2"), e("4")});
}

/// Zigzag subposet 42 <- 12 -> 22 <- 21 -> 32 <- 31 -> 51 <- 11 of G_{5,2}.
inline OrderMap grid_zigzag_cover(const PosetPtr& g52) {
  auto z = std::make_shared<const Poset>(Poset::from_hasse(
      8, {{4, 5}, {4, 7}, {0, 3}, {1, 5}, {1, 6}, {2, 6}, {2, 3}}, {"11", "21", "31", "51", "12", "22", "32", "42"}));
  auto e = [&](const char* l) { return *g52->find(l); };
  return OrderMap(z, g52, {e("1"), e("2"), e("3"), e("5"), e("1'"), e("2'"), e("3'"), e("4'")});
}

/// A G_{5,2} filtration on the complete graph over vertices 1..4. Edges 12,
/// 13, 14 arrive late and the triangle 234 is filled from (4,2) on.
inline SimplicialFiltration grid_filtration() {
  auto p = make_grid(5, 2);
  auto up = [&](std::vector<const char*> gens) {
    ElementList g;
    for (auto s : gens) g.push_back(*p->find(s));
    return p->up_set(g);
  };
  std::vector<Simplex> s;
  std::vector<ElementList> at;
  auto add = [&](Simplex x, ElementList a) {
    s.push_back(std::move(x));
    at.push_back(std::move(a));
  };
  for (std::size_t v = 1; v <= 4; ++v) add({v}, up({"1"}));
  add({2, 3}, up({"1"}));
  add({3, 4}, up({"1"}));
  add({2, 4}, up({"1"}));
  add({1, 2}, up({"1'", "3"}));
  add({1, 3}, up({"2"}));
  add({1, 4}, up({"1'", "2"}));
  add({2, 3, 4}, up({"4'"}));
  return SimplicialFiltration(p, s, at);
}

} // namespace testing_support
