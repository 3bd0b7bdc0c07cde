// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/cover.hpp"

#include <optional>
#include <string>

namespace intmult {

/// B_{n,m} in the numbering of make_bipath.
struct BipathShape {
  std::size_t n = 0;
  std::size_t m = 0;

  Element bottom() const { return 0; }
  Element top() const { return n + m + 1; }
  Element upper(std::size_t i) const { return i; }
  Element lower(std::size_t i) const { return n + i; }
  bool on_upper(Element e) const { return e >= 1 && e <= n; }
  bool on_lower(Element e) const { return e > n && e <= n + m; }

  /// Successor / predecessor along the upper path (0^ .. n .. 1^) and the
  /// lower path (0^ .. m' .. 1^), following the bipath endpoint conventions.
  Element next_upper(Element e) const;
  Element prev_upper(Element e) const;
  Element next_lower(Element e) const;
  Element prev_lower(Element e) const;
};

std::optional<BipathShape> bipath_shape(const Poset& p);

enum class BipathKind { Full, Upper, Lower, Left, Right };

/// Upper(s,t), Lower(s',t'), Left(t,t'), Right(s,s'); Full ignores endpoints.
struct BipathInterval {
  BipathKind kind = BipathKind::Full;
  Element first = 0;
  Element second = 0;

  friend bool operator==(const BipathInterval&, const BipathInterval&) = default;
};

std::string kind_name(BipathKind k);
std::string describe(const Poset& p, const BipathInterval& b);

BipathInterval classify(const Interval& i);
Interval to_interval(const PosetPtr& p, const BipathInterval& b);

std::size_t closed_form_multiplicity(const PersistenceModule& m, const Interval& i);

/// Z with an extra copy of 0^ below 1 (covers Upper, Lower, Right and Full).
OrderMap bipath_right_cover(const PosetPtr& p);
/// Z' with an extra copy of 1^ above m' (covers the Left intervals).
OrderMap bipath_left_cover(const PosetPtr& p);
/// Single zigzag S with a doubled lower path and a copy of 0^ below 1.
OrderMap bipath_unified_cover(const PosetPtr& p);

Diagram diagram_closed_form(const PersistenceModule& m);
Diagram diagram_via_zigzag(const PersistenceModule& m);
Diagram diagram_via_unified_cover(const PersistenceModule& m);

} // namespace intmult
