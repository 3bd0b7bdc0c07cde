// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace intmult {

using Element = std::size_t;
using ElementList = std::vector<Element>;
using Arrow = std::pair<Element, Element>;

/// Finite poset with precomputed order closure. Element indices double as the
/// auxiliary total order used for every tie-break and lexicographic order.
class Poset {
public:
  /// Transitive closure of `edges`; redundant edges are dropped from the Hasse
  /// quiver. Throws CycleError when the closure is not antisymmetric.
  static Poset from_hasse(std::size_t n, const std::vector<Arrow>& edges,
                          std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool leq(Element x, Element y) const { return leq_[x * n_ + y]; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  const std::vector<Arrow>& hasse_arrows() const { return hasse_; }
  bool is_cover(Element x, Element y) const;
  /// Hasse successors (upper covers) and predecessors (lower covers).
  const ElementList& upper_covers(Element x) const { return up_[x]; }
  const ElementList& lower_covers(Element x) const { return down_[x]; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(const std::string& label) const;

  /// Elements sorted by a linear extension (ascending).
  const ElementList& linear_extension() const { return topo_; }

  ElementList up_set(const ElementList& s) const;
  ElementList down_set(const ElementList& s) const;
  ElementList sources(const ElementList& s) const;
  ElementList sinks(const ElementList& s) const;
  ElementList pre_join(Element a, Element b) const;
  ElementList pre_meet(Element a, Element b) const;

  bool is_up_set(const ElementList& s) const;
  bool is_down_set(const ElementList& s) const;
  bool is_convex(const ElementList& s) const;
  bool is_connected(const ElementList& s) const;
  bool is_chain() const;

  bool same_order(const Poset& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
  std::size_t n_ = 0;
  std::vector<bool> leq_;
  std::vector<Arrow> hasse_;
  std::vector<ElementList> up_, down_;
  std::vector<std::string> labels_;
  ElementList topo_;
};

using PosetPtr = std::shared_ptr<const Poset>;

/// Convex, connected, nonempty subset of a poset; members kept sorted.
class Interval {
public:
  Interval(PosetPtr poset, ElementList members);

  const PosetPtr& poset() const { return poset_; }
  const ElementList& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const { return mask_[x]; }
  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) { return a.members_ == b.members_; }
  friend bool operator<(const Interval& a, const Interval& b) { return a.members_ < b.members_; }

private:
  PosetPtr poset_;
  ElementList members_;
  std::vector<bool> mask_;
};

/// Labelled element of sc1 / sk1: a pair of sources (or sinks) lo < hi in the
/// auxiliary order together with one element of their pre-join (pre-meet).
struct LabeledJoin {
  Element lo;
  Element hi;
  Element witness;
  friend bool operator==(const LabeledJoin&, const LabeledJoin&) = default;
  friend auto operator<=>(const LabeledJoin&, const LabeledJoin&) = default;
};

ElementList proper_up_set(const Interval& i);
ElementList proper_down_set(const Interval& i);
std::vector<LabeledJoin> sc1(const Interval& i);
std::vector<LabeledJoin> sk1(const Interval& i);

/// All intervals, ordered lexicographically by sorted member list.
std::vector<Interval> enumerate_intervals(const PosetPtr& p);

/// G_{m,n}: element (x, y) with 1 <= x <= m, 1 <= y <= n has index
/// (y-1)*m + (x-1). Labels are x followed by y-1 primes.
PosetPtr make_grid(std::size_t m, std::size_t n);
PosetPtr make_chain(std::size_t n);
/// One element per character boundary; '>' or 'f' gives i -> i+1, '<' or 'b'
/// gives i+1 -> i. An empty string yields a single element.
PosetPtr make_zigzag(const std::string& orientation);
/// B_{n,m}: indices 0 (0^), 1..n, n+1..n+m (1'..m'), n+m+1 (1^).
PosetPtr make_bipath(std::size_t n, std::size_t m);

} // namespace intmult
