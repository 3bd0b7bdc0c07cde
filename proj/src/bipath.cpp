// SPDX-License-Identifier: Apache-2.0
#include "intmult/bipath.hpp"
#include "intmult/errors.hpp"

#include <algorithm>

namespace intmult {

Element BipathShape::next_upper(Element e) const {
  if (e == bottom()) return n >= 1 ? upper(1) : top();
  if (e == upper(n)) return top();
  if (on_upper(e)) return e + 1;
  throw NotABipath("element is not on the upper path below 1^");
}

Element BipathShape::prev_upper(Element e) const {
  if (e == top()) return upper(n);
  if (e == upper(1)) return bottom();
  if (on_upper(e)) return e - 1;
  throw NotABipath("element is not on the upper path above 0^");
}

Element BipathShape::next_lower(Element e) const {
  if (e == bottom()) return lower(1);
  if (e == lower(m)) return top();
  if (on_lower(e)) return e + 1;
  throw NotABipath("element is not on the lower path below 1^");
}

Element BipathShape::prev_lower(Element e) const {
  if (e == top()) return lower(m);
  if (e == lower(1)) return bottom();
  if (on_lower(e)) return e - 1;
  throw NotABipath("element is not on the lower path above 0^");
}

std::optional<BipathShape> bipath_shape(const Poset& p) {
  if (p.size() < 4) return std::nullopt;
  const std::size_t inner = p.size() - 2;
  for (std::size_t n = 1; n < inner; ++n)
    if (p.same_order(*make_bipath(n, inner - n))) return BipathShape{n, inner - n};
  return std::nullopt;
}

namespace {

BipathShape require_bipath(const Poset& p) {
  auto s = bipath_shape(p);
  if (!s) throw NotABipath("poset is not a bipath in canonical numbering");
  return *s;
}

} // namespace

std::string kind_name(BipathKind k) {
  switch (k) {
  case BipathKind::Full: return "full";
  case BipathKind::Upper: return "upper";
  case BipathKind::Lower: return "lower";
  case BipathKind::Left: return "left";
  case BipathKind::Right: return "right";
  }
  return "?";
}

std::string describe(const Poset& p, const BipathInterval& b) {
  if (b.kind == BipathKind::Full) return "full";
  return kind_name(b.kind) + "(" + p.label(b.first) + "," + p.label(b.second) + ")";
}

BipathInterval classify(const Interval& i) {
  const BipathShape s = require_bipath(*i.poset());
  const bool has_bottom = i.contains(s.bottom()), has_top = i.contains(s.top());
  ElementList up, low;
  for (auto e : i.members()) {
    if (s.on_upper(e)) up.push_back(e);
    if (s.on_lower(e)) low.push_back(e);
  }
  if (has_bottom && has_top) return {BipathKind::Full, s.bottom(), s.top()};
  if (has_bottom)
    return {BipathKind::Left, up.empty() ? s.bottom() : up.back(), low.empty() ? s.bottom() : low.back()};
  if (has_top)
    return {BipathKind::Right, up.empty() ? s.top() : up.front(), low.empty() ? s.top() : low.front()};
  if (!up.empty()) return {BipathKind::Upper, up.front(), up.back()};
  return {BipathKind::Lower, low.front(), low.back()};
}

Interval to_interval(const PosetPtr& p, const BipathInterval& b) {
  const BipathShape s = require_bipath(*p);
  ElementList members;
  auto walk = [&](Element from, Element to, bool upper) {
    for (Element e = from;; e = upper ? s.next_upper(e) : s.next_lower(e)) {
      members.push_back(e);
      if (e == to) break;
    }
  };
  switch (b.kind) {
  case BipathKind::Full:
    for (Element e = 0; e < p->size(); ++e) members.push_back(e);
    break;
  case BipathKind::Upper: walk(b.first, b.second, true); break;
  case BipathKind::Lower: walk(b.first, b.second, false); break;
  case BipathKind::Left:
    walk(s.bottom(), b.first, true);
    walk(s.bottom(), b.second, false);
    break;
  case BipathKind::Right:
    walk(b.first, s.top(), true);
    walk(b.second, s.top(), false);
    break;
  }
  return Interval(p, members);
}

std::size_t closed_form_multiplicity(const PersistenceModule& m, const Interval& i) {
  const BipathShape s = require_bipath(*m.poset());
  const BipathInterval b = classify(i);
  // M_{y,x}
  auto M = [&](Element y, Element x) { return m.structure_map(x, y); };
  const Element bot = s.bottom(), top = s.top();
  auto segment = [&](Element lo, Element hi, bool upper) {
    const Element after = upper ? s.next_upper(hi) : s.next_lower(hi);
    const Element before = upper ? s.prev_upper(lo) : s.prev_lower(lo);
    DenseMatrix a = M(after, lo), bb = M(hi, before), c = M(hi, lo);
    DenseMatrix whole = block(m.field(), {a.rows(), c.rows()}, {a.cols(), bb.cols()}, {{a, std::nullopt}, {c, bb}});
    return rank(whole) - rank(a) - rank(bb);
  };
  switch (b.kind) {
  case BipathKind::Full: return rank(M(top, bot));
  case BipathKind::Upper: return segment(b.first, b.second, true);
  case BipathKind::Lower: return segment(b.first, b.second, false);
  case BipathKind::Left: {
    const Element t = b.first, tp = b.second;
    DenseMatrix head = vstack({M(s.next_upper(t), bot), M(s.next_lower(tp), bot)});
    if (t == bot || tp == bot) {
      const Element mx = t == bot ? tp : t;
      return rank(vstack({head, M(mx, bot)})) - rank(head);
    }
    DenseMatrix mt = M(t, bot), mtp = M(tp, bot);
    DenseMatrix tail = vstack({mt, -mtp});
    DenseMatrix whole = block(m.field(), {head.rows(), mt.rows(), mtp.rows()}, {head.cols(), tail.cols()},
                              {{head, std::nullopt}, {mt, mt}, {std::nullopt, -mtp}});
    return rank(whole) - rank(head) - rank(tail);
  }
  case BipathKind::Right: {
    const Element sv = b.first, sp = b.second;
    DenseMatrix tail = hstack({M(top, s.prev_upper(sv)), M(top, s.prev_lower(sp))});
    if (sv == top || sp == top) {
      const Element mn = sv == top ? sp : sv;
      return rank(hstack({M(top, mn), tail})) - rank(tail);
    }
    DenseMatrix ms = M(top, sv), msp = M(top, sp);
    DenseMatrix head = hstack({ms, msp});
    DenseMatrix whole = block(m.field(), {ms.rows(), ms.rows()}, {ms.cols(), msp.cols(), tail.cols()},
                              {{ms, msp, std::nullopt}, {ms, std::nullopt, tail}});
    return rank(whole) - rank(head) - rank(tail);
  }
  }
  return 0;
}

namespace {

struct CoverBuild {
  std::vector<Arrow> edges;
  std::vector<std::string> labels;
  std::vector<Element> image;
};

CoverBuild bipath_core(const Poset& p, const BipathShape& s, bool upper_from_bottom, bool lower_to_top) {
  CoverBuild c;
  c.labels = p.labels();
  for (Element e = 0; e < p.size(); ++e) c.image.push_back(e);
  if (upper_from_bottom) c.edges.emplace_back(s.bottom(), s.upper(1));
  for (std::size_t k = 1; k < s.n; ++k) c.edges.emplace_back(s.upper(k), s.upper(k + 1));
  c.edges.emplace_back(s.upper(s.n), s.top());
  c.edges.emplace_back(s.bottom(), s.lower(1));
  for (std::size_t k = 1; k < s.m; ++k) c.edges.emplace_back(s.lower(k), s.lower(k + 1));
  if (lower_to_top) c.edges.emplace_back(s.lower(s.m), s.top());
  return c;
}

OrderMap finish(const PosetPtr& p, CoverBuild c) {
  auto z = std::make_shared<const Poset>(Poset::from_hasse(c.labels.size(), c.edges, c.labels));
  return OrderMap(z, p, c.image);
}

} // namespace

OrderMap bipath_right_cover(const PosetPtr& p) {
  const BipathShape s = require_bipath(*p);
  CoverBuild c = bipath_core(*p, s, false, true);
  const Element extra = p->size();
  c.labels.push_back("0~");
  c.image.push_back(s.bottom());
  c.edges.emplace_back(extra, s.upper(1));
  return finish(p, c);
}

OrderMap bipath_left_cover(const PosetPtr& p) {
  const BipathShape s = require_bipath(*p);
  CoverBuild c = bipath_core(*p, s, true, false);
  const Element extra = p->size();
  c.labels.push_back("1~");
  c.image.push_back(s.top());
  c.edges.emplace_back(s.lower(s.m), extra);
  return finish(p, c);
}

OrderMap bipath_unified_cover(const PosetPtr& p) {
  const BipathShape s = require_bipath(*p);
  CoverBuild c = bipath_core(*p, s, false, true);
  const Element extra = p->size();
  c.labels.push_back("0~");
  c.image.push_back(s.bottom());
  c.edges.emplace_back(extra, s.upper(1));
  for (std::size_t k = 1; k <= s.m; ++k) {
    c.labels.push_back(std::to_string(k) + "''");
    c.image.push_back(s.lower(k));
    c.edges.emplace_back(k == 1 ? extra : extra + k - 1, extra + k);
  }
  return finish(p, c);
}

namespace {

Diagram assemble(const PersistenceModule& m, const std::function<std::size_t(const Interval&)>& mult) {
  Diagram d;
  d.accounted.assign(m.poset()->size(), 0);
  for (const auto& i : enumerate_intervals(m.poset())) {
    const std::size_t k = mult(i);
    if (!k) continue;
    for (auto x : i.members()) d.accounted[x] += k;
    d.entries.push_back({i, k});
  }
  std::stable_sort(d.entries.begin(), d.entries.end(), [](const DiagramEntry& a, const DiagramEntry& b) {
    if (a.interval.size() != b.interval.size()) return a.interval.size() < b.interval.size();
    return a.interval < b.interval;
  });
  d.decomposable = d.accounted == m.dims();
  return d;
}

} // namespace

Diagram diagram_closed_form(const PersistenceModule& m) {
  require_bipath(*m.poset());
  return assemble(m, [&](const Interval& i) { return closed_form_multiplicity(m, i); });
}

Diagram diagram_via_zigzag(const PersistenceModule& m) {
  require_bipath(*m.poset());
  const OrderMap right = bipath_right_cover(m.poset());
  const OrderMap left = bipath_left_cover(m.poset());
  const PersistenceModule rm = restrict_module(right, m);
  const PersistenceModule lm = restrict_module(left, m);
  return assemble(m, [&](const Interval& i) {
    const bool use_left = classify(i).kind == BipathKind::Left;
    const OrderMap& zeta = use_left ? left : right;
    return bar_d(use_left ? lm : rm, restrict_module(zeta, interval_module(i, m.field())));
  });
}

Diagram diagram_via_unified_cover(const PersistenceModule& m) {
  require_bipath(*m.poset());
  const OrderMap zeta = bipath_unified_cover(m.poset());
  const PersistenceModule rm = restrict_module(zeta, m);
  return assemble(m, [&](const Interval& i) { return bar_d(rm, restrict_module(zeta, interval_module(i, m.field()))); });
}

} // namespace intmult
