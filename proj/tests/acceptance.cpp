// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All comparisons are exact integer equality; only wall-clock limits are real
// valued and they are pinned below.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace intmult;
using namespace testing_support;

namespace {

constexpr double kFastLimitSeconds = 1.0;
constexpr double kSuiteLimitSeconds = 300.0;
constexpr std::size_t kOracleInstances = 500;
constexpr std::size_t kChoiceInstances = 50;
constexpr std::size_t kBipathInstances = 200;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

bool run(int number, const std::string& title, const std::function<void(Outcome&)>& body, double limit = 0.0) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0.0 && secs >= limit) {
    out.ok = false;
    out.detail << "over the " << limit << " s limit; ";
  }
  std::printf("CRITERION %d %s: %s (%.3f s) %s\n", number, out.ok ? "PASS" : "FAIL", title.c_str(), secs,
              out.detail.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

bool same_diagram(const Diagram& a, const Diagram& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k)
    if (!(a.entries[k].interval == b.entries[k].interval) || a.entries[k].multiplicity != b.entries[k].multiplicity)
      return false;
  return true;
}

void grid_example_values(Outcome& o) {
  for (Field f : {Field::prime(2), Field::prime(5), Field::rationals()}) {
    PersistenceModule m = grid_example(f, false);
    PersistenceModule mv = grid_example(f, true);
    Interval i = grid_example_interval(m.poset());
    const std::size_t d = interval_multiplicity(m, i), dv = interval_multiplicity(mv, i);
    o.expect(d == 2, "d_M = " + std::to_string(d) + " over " + f.name());
    o.expect(dv == 1, "d_M' = " + std::to_string(dv) + " over " + f.name());
  }
  o.detail << "d_M=2 d_M'=1 over GF(2), GF(5), Q; ";
}

void d4_values(Outcome& o) {
  for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    PersistenceModule m1 = d4_module(f, 1), m2 = d4_module(f, 2), m3 = d4_source_module(f);
    Interval all(m1.poset(), {0, 1, 2, 3});
    o.expect(interval_multiplicity(m1, all) == 1, "d_M1 over " + f.name());
    o.expect(interval_multiplicity(m2, Interval(m2.poset(), {0, 1, 2, 3})) == 0, "d_M2 over " + f.name());
    o.expect(interval_multiplicity(m3, Interval(m3.poset(), {0, 1, 2, 3})) == 1, "source-centred over " + f.name());
  }
  o.detail << "1, 0 and 1 over GF(2), GF(3), Q; ";
}

void one_parameter(Outcome& o) {
  auto c = make_chain(6);
  const Field f = Field::prime(2);
  PersistenceModule m =
      direct_sum(interval_module(interval_of(c, {"2", "3", "4"}), f), interval_module(interval_of(c, {"3", "4", "5"}), f));
  auto e = [&](const char* l) { return *c->find(l); };
  struct Case {
    const char* lo;
    const char* hi;
    std::vector<const char*> members;
    std::size_t expected;
  };
  for (const Case& k : std::vector<Case>{{"3", "4", {"3", "4"}, 0}, {"2", "4", {"2", "3", "4"}, 1}, {"3", "5", {"3", "4", "5"}, 1}}) {
    const std::size_t rank_route = one_parameter_multiplicity(m, e(k.lo), e(k.hi));
    const std::size_t general = interval_multiplicity(m, interval_of(c, k.members));
    o.expect(rank_route == k.expected, std::string("rank route on [") + k.lo + "," + k.hi + "]");
    o.expect(general == k.expected, std::string("general formula on [") + k.lo + "," + k.hi + "]");
  }
  o.detail << "mu[3,4]=0 mu[2,4]=1 mu[3,5]=1 by both routes; ";
}

void oracle_equivalence(Outcome& o) {
  std::mt19937 rng(2024);
  std::size_t instances = 0, intervals = 0, non_decomposable = 0;
  std::uniform_int_distribution<std::size_t> size(1, 8);
  while (instances < kOracleInstances) {
    PosetPtr p = random_poset(rng, size(rng), instances % 2 ? 0.0 : 0.3);
    for (Field f : {Field::prime(2), Field::prime(5)}) {
      PersistenceModule m = random_module(rng, p, f, 3);
      for (auto d : m.dims()) o.expect(d <= 3, "pointwise dimension above 3");
      for (const auto& i : enumerate_intervals(p)) {
        const std::size_t d = interval_multiplicity(m, i);
        o.expect(d == oracle_multiplicity(m, i), "library oracle on " + i.to_string());
        o.expect(d == reference_multiplicity(m, i), "test oracle on " + i.to_string());
        ++intervals;
      }
      non_decomposable += !is_interval_decomposable(m).decomposable;
      ++instances;
    }
  }
  o.detail << instances << " instances, " << intervals << " intervals, " << non_decomposable
           << " not interval-decomposable; ";
}

void choice_invariance(Outcome& o) {
  std::mt19937 rng(2025);
  std::size_t instances = 0, evaluations = 0;
  while (instances < kChoiceInstances) {
    PosetPtr p = random_poset(rng, 6, instances % 2 ? 0.0 : 0.4);
    PersistenceModule m = random_module(rng, p, instances % 3 ? Field::prime(2) : Field::prime(5));
    for (const auto& i : enumerate_intervals(p)) {
      PresentationData pd = build_presentation(i);
      const std::size_t d = interval_multiplicity(m, pd);
      std::size_t seen = 0;
      for_each_choice(pd, [&](const PresentationData& alt) {
        o.expect(interval_multiplicity(m, alt) == d, "choice-dependent value on " + i.to_string());
        ++seen;
      });
      o.expect(seen == choice_count(pd), "enumeration count on " + i.to_string());
      evaluations += seen;
    }
    ++instances;
  }
  o.detail << instances << " instances, " << evaluations << " choice evaluations; ";
}

void grid_equivalence(Outcome& o) {
  std::mt19937 rng(2026);
  std::size_t intervals = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      auto g = make_grid(m, n);
      auto all = enumerate_intervals(g);
      for (int t = 0; t < 3; ++t)
        for (Field f : {Field::prime(2), Field::prime(5)}) {
          PersistenceModule mod = random_module(rng, g, f);
          for (const auto& i : all) {
            const std::size_t d = interval_multiplicity(mod, i);
            o.expect(grid_multiplicity(mod, i) == d, "grid presentation on " + i.to_string());
            o.expect(reduced_rank_multiplicity(mod, i) == d, "reduced rank on " + i.to_string());
            ++intervals;
          }
        }
    }
  o.detail << intervals << " intervals over all grids up to 4x4; ";
}

void bipath_equivalence(Outcome& o) {
  std::mt19937 rng(2027);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  std::size_t instances = 0;
  while (instances < kBipathInstances) {
    auto p = make_bipath(len(rng), len(rng));
    PersistenceModule m = random_module(rng, p, instances % 2 ? Field::prime(2) : Field::prime(5));
    Diagram closed = diagram_closed_form(m);
    o.expect(same_diagram(closed, maximal_interval_summand(m)), "closed form vs general formula");
    o.expect(same_diagram(closed, diagram_via_zigzag(m)), "closed form vs two-zigzag route");
    std::size_t total = 0;
    for (const auto& e : closed.entries) total += e.multiplicity * e.interval.size();
    o.expect(total == m.total_dim(), "sum of mult times dim differs from dim M");
    ++instances;
  }
  o.detail << instances << " bipath modules; ";
}

void cover_routes(Outcome& o) {
  std::mt19937 rng(2028);
  std::size_t checks = 0;

  auto g52 = make_grid(5, 2);
  OrderMap zz = grid_zigzag_cover(g52);
  Interval i51 = interval_of(g52, {"1'", "2'", "3'", "2", "3", "4", "5"});
  o.expect(essentially_covers(zz, i51).has_value(), "zigzag cover on the five-by-two grid");
  for (int t = 0; t < 40; ++t) {
    PersistenceModule m = random_module(rng, g52, Field::prime(2));
    o.expect(multiplicity_via_cover(m, i51, zz) == interval_multiplicity(m, i51), "five-by-two cover route");
    ++checks;
  }

  auto d4 = d4_source_poset();
  OrderMap folded = folded_zigzag(d4);
  Interval whole(d4, {0, 1, 2, 3});
  auto fc = essentially_covers(folded, whole);
  o.expect(fc.has_value() && fc->reduced, "folded zigzag covers through the reduced morphism");
  o.expect(multiplicity_via_cover(d4_source_module(Field::rationals()), whole, folded) == 1, "source-centred via cover");
  for (int t = 0; t < 40; ++t) {
    PersistenceModule m = random_module(rng, d4, Field::prime(5));
    o.expect(multiplicity_via_cover(m, whole, folded) == interval_multiplicity(m, whole), "folded zigzag route");
    ++checks;
  }

  std::size_t random_covers = 0, attempted = 0;
  for (std::size_t a = 2; a <= 4; ++a)
    for (std::size_t b = 2; b <= 3; ++b) {
      auto g = make_grid(a, b);
      for (const auto& i : enumerate_intervals(g)) {
        const FormalMorphism gm = assemble_g(build_presentation(i)).g;
        const std::size_t nc = gm.col_count(), nr = gm.row_count();
        std::vector<Arrow> edges;
        for (std::size_t r = 0; r < nr; ++r)
          for (std::size_t c = 0; c < nc; ++c)
            if (gm.coeff(r, c) != 0) edges.emplace_back(c, nc + r);
        std::vector<Element> image(gm.col_objects());
        image.insert(image.end(), gm.row_objects().begin(), gm.row_objects().end());
        ++attempted;
        OrderMap zeta(std::make_shared<const Poset>(Poset::from_hasse(nc + nr, edges)), g, image);
        if (!essentially_covers(zeta, i)) continue;
        ++random_covers;
        PersistenceModule m = random_module(rng, g, Field::prime(2));
        o.expect(multiplicity_via_cover(m, i, zeta) == interval_multiplicity(m, i), "bipartite grid cover route");
        ++checks;
      }
    }

  SimplicialFiltration f = grid_filtration();
  const std::size_t d = multiplicity_from_filtration(f, 1, Field::prime(2), i51);
  const std::size_t via = multiplicity_from_filtration(f, 1, Field::prime(2), i51, zz);
  o.expect(d == 0 && via == 0, "filtration pipeline multiplicity");
  Diagram rd = maximal_interval_summand(persistent_homology(f.pullback(zz), 1, Field::prime(2)));
  auto z = zz.domain();
  std::vector<Interval> expected{interval_of(z, {"42"}), interval_of(z, {"31", "51", "32"}),
                                 interval_of(z, {"12", "22", "42"}), interval_of(z, {"21", "31", "51", "22", "32"}),
                                 interval_of(z, {"11", "21", "31", "51", "12", "22", "32"})};
  bool match = rd.decomposable && rd.entries.size() == expected.size();
  for (const auto& e : rd.entries)
    match = match && e.multiplicity == 1 && std::find(expected.begin(), expected.end(), e.interval) != expected.end();
  o.expect(match, "restricted homology diagram");
  o.detail << checks << " cover-route checks (" << random_covers << " of " << attempted << " random grid covers), filtration d=0, "
           << rd.entries.size() << " restricted summands; ";
}

void decomposability(Outcome& o) {
  std::mt19937 rng(2029);
  std::size_t sums = 0;
  for (int t = 0; t < 40; ++t) {
    PosetPtr p = random_poset(rng, 6);
    auto all = enumerate_intervals(p);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::vector<PersistenceModule> parts;
    for (int k = 0; k < 4; ++k) parts.push_back(interval_module(all[pick(rng)], Field::prime(3)));
    PersistenceModule m = direct_sum(parts);
    DecomposabilityReport r = is_interval_decomposable(m);
    o.expect(r.decomposable && r.dimension_vectors_match, "interval sum reported decomposable");
    o.expect(r.diagram.accounted == m.dims(), "per-element accounting");
    ++sums;
  }
  PersistenceModule w = d4_module(Field::prime(2), 2);
  DecomposabilityReport r = is_interval_decomposable(w);
  o.expect(!r.decomposable && !r.dimension_vectors_match, "witness reported decomposable");
  for (const auto& i : enumerate_intervals(w.poset()))
    o.expect(interval_multiplicity(w, i) == reference_multiplicity(w, i), "witness oracle check on " + i.to_string());
  o.detail << sums << " interval sums decomposable; witness accounts for " << r.total_accounted << " of " << r.total_dim
           << "; ";
}

} // namespace

int main() {
  bool all = true;
  all &= run(1, "grid worked example", grid_example_values, kFastLimitSeconds);
  all &= run(2, "D4 examples", d4_values, kFastLimitSeconds);
  all &= run(3, "one-parameter ranks", one_parameter);
  all &= run(4, "oracle equivalence", oracle_equivalence, kSuiteLimitSeconds);
  all &= run(5, "choice invariance", choice_invariance);
  all &= run(6, "grid route equivalence", grid_equivalence);
  all &= run(7, "bipath route equivalence", bipath_equivalence);
  all &= run(8, "essential cover routes", cover_routes);
  all &= run(9, "decomposability diagnostics", decomposability);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
