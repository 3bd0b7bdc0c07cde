// SPDX-License-Identifier: Apache-2.0
#include "intmult/poset.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <set>

namespace intmult {

Poset Poset::from_hasse(std::size_t n, const std::vector<Arrow>& edges, std::vector<std::string> labels) {
  Poset p;
  p.n_ = n;
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw ShapeError("label count does not match element count");
  p.labels_ = std::move(labels);
  p.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  for (auto [x, y] : edges) {
    if (x >= n || y >= n)
      throw ShapeError("edge (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    p.leq_[x * n + y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw CycleError("order relation has a cycle through elements " + p.labels_[i] + " and " + p.labels_[j]);

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (p.less(x, z) && p.less(z, y)) cover = false;
      if (cover) {
        p.hasse_.emplace_back(x, y);
        p.up_[x].push_back(y);
        p.down_[y].push_back(x);
      }
    }

  p.topo_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.topo_[i] = i;
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(y, x)) ++below[x];
  std::stable_sort(p.topo_.begin(), p.topo_.end(), [&](Element a, Element b) { return below[a] < below[b]; });
  return p;
}

bool Poset::is_cover(Element x, Element y) const {
  return std::find(up_[x].begin(), up_[x].end(), y) != up_[x].end();
}

std::optional<Element> Poset::find(const std::string& label) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

ElementList Poset::up_set(const ElementList& s) const {
  ElementList out;
  for (std::size_t y = 0; y < n_; ++y)
    for (auto x : s)
      if (leq(x, y)) {
        out.push_back(y);
        break;
      }
  return out;
}

ElementList Poset::down_set(const ElementList& s) const {
  ElementList out;
  for (std::size_t y = 0; y < n_; ++y)
    for (auto x : s)
      if (leq(y, x)) {
        out.push_back(y);
        break;
      }
  return out;
}

ElementList Poset::sources(const ElementList& s) const {
  ElementList out;
  for (auto x : s) {
    bool minimal = true;
    for (auto y : s)
      if (less(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementList Poset::sinks(const ElementList& s) const {
  ElementList out;
  for (auto x : s) {
    bool maximal = true;
    for (auto y : s)
      if (less(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementList Poset::pre_join(Element a, Element b) const {
  ElementList common;
  for (std::size_t z = 0; z < n_; ++z)
    if (leq(a, z) && leq(b, z)) common.push_back(z);
  return sources(common);
}

ElementList Poset::pre_meet(Element a, Element b) const {
  ElementList common;
  for (std::size_t z = 0; z < n_; ++z)
    if (leq(z, a) && leq(z, b)) common.push_back(z);
  return sinks(common);
}

bool Poset::is_up_set(const ElementList& s) const {
  std::vector<bool> in(n_, false);
  for (auto x : s) in[x] = true;
  for (auto x : s)
    for (std::size_t y = 0; y < n_; ++y)
      if (leq(x, y) && !in[y]) return false;
  return true;
}

bool Poset::is_down_set(const ElementList& s) const {
  std::vector<bool> in(n_, false);
  for (auto x : s) in[x] = true;
  for (auto x : s)
    for (std::size_t y = 0; y < n_; ++y)
      if (leq(y, x) && !in[y]) return false;
  return true;
}

bool Poset::is_convex(const ElementList& s) const {
  std::vector<bool> in(n_, false);
  for (auto x : s) in[x] = true;
  for (auto x : s)
    for (auto y : s)
      for (std::size_t z = 0; z < n_; ++z)
        if (!in[z] && leq(x, z) && leq(z, y)) return false;
  return true;
}

bool Poset::is_connected(const ElementList& s) const {
  if (s.empty()) return false;
  std::vector<bool> in(n_, false), seen(n_, false);
  for (auto x : s) in[x] = true;
  ElementList stack{s.front()};
  seen[s.front()] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    ++count;
    for (auto y : s)
      if (!seen[y] && comparable(x, y)) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::size_t distinct = 0;
  for (std::size_t x = 0; x < n_; ++x) distinct += in[x];
  return count == distinct;
}

bool Poset::is_chain() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (!comparable(x, y)) return false;
  return true;
}

Interval::Interval(PosetPtr poset, ElementList members) : poset_(std::move(poset)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw InvalidInterval("an interval must be nonempty");
  mask_.assign(poset_->size(), false);
  for (auto x : members_) {
    if (x >= poset_->size()) throw InvalidInterval("element " + std::to_string(x) + " out of range");
    mask_[x] = true;
  }
  if (!poset_->is_convex(members_)) throw InvalidInterval("subset " + to_string() + " is not convex");
  if (!poset_->is_connected(members_)) throw InvalidInterval("subset " + to_string() + " is not connected");
}

std::string Interval::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + poset_->label(members_[i]);
  return s + "}";
}

ElementList proper_up_set(const Interval& i) {
  ElementList out;
  for (auto x : i.poset()->up_set(i.members()))
    if (!i.contains(x)) out.push_back(x);
  return out;
}

ElementList proper_down_set(const Interval& i) {
  ElementList out;
  for (auto x : i.poset()->down_set(i.members()))
    if (!i.contains(x)) out.push_back(x);
  return out;
}

std::vector<LabeledJoin> sc1(const Interval& i) {
  const Poset& p = *i.poset();
  auto sc = p.sources(i.members());
  std::vector<LabeledJoin> out;
  for (std::size_t a = 0; a < sc.size(); ++a)
    for (std::size_t b = a + 1; b < sc.size(); ++b)
      for (auto c : p.pre_join(sc[a], sc[b])) out.push_back({sc[a], sc[b], c});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledJoin> sk1(const Interval& i) {
  const Poset& p = *i.poset();
  auto sk = p.sinks(i.members());
  std::vector<LabeledJoin> out;
  for (std::size_t a = 0; a < sk.size(); ++a)
    for (std::size_t b = a + 1; b < sk.size(); ++b)
      for (auto d : p.pre_meet(sk[a], sk[b])) out.push_back({sk[a], sk[b], d});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> enumerate_intervals(const PosetPtr& p) {
  const std::size_t n = p->size();
  auto closure = [&](const ElementList& s) {
    ElementList out;
    for (std::size_t z = 0; z < n; ++z) {
      bool above = false, below = false;
      for (auto x : s) {
        above = above || p->leq(x, z);
        below = below || p->leq(z, x);
      }
      if (above && below) out.push_back(z);
    }
    return out;
  };
  std::set<ElementList> seen;
  std::vector<ElementList> frontier;
  for (std::size_t x = 0; x < n; ++x) {
    seen.insert({x});
    frontier.push_back({x});
  }
  while (!frontier.empty()) {
    std::vector<ElementList> next;
    for (const auto& s : frontier) {
      std::vector<bool> in(n, false);
      for (auto x : s) in[x] = true;
      for (auto x : s) {
        auto grow = [&](Element y) {
          if (in[y]) return;
          ElementList t = s;
          t.push_back(y);
          t = closure(t);
          if (seen.insert(t).second) next.push_back(std::move(t));
        };
        for (auto y : p->upper_covers(x)) grow(y);
        for (auto y : p->lower_covers(x)) grow(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Interval> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(p, s);
  return out;
}

PosetPtr make_grid(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw ShapeError("grid dimensions must be positive");
  std::vector<Arrow> edges;
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < m; ++x) {
      labels.push_back(std::to_string(x + 1) + std::string(y, '\''));
      std::size_t id = y * m + x;
      if (x + 1 < m) edges.emplace_back(id, id + 1);
      if (y + 1 < n) edges.emplace_back(id, id + m);
    }
  return std::make_shared<const Poset>(Poset::from_hasse(m * n, edges, labels));
}

PosetPtr make_chain(std::size_t n) {
  if (n == 0) throw ShapeError("chain length must be positive");
  std::vector<Arrow> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return std::make_shared<const Poset>(Poset::from_hasse(n, edges, labels));
}

PosetPtr make_zigzag(const std::string& orientation) {
  std::vector<Arrow> edges;
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 0; i < orientation.size(); ++i) {
    char c = orientation[i];
    if (c == '>' || c == 'f')
      edges.emplace_back(i, i + 1);
    else if (c == '<' || c == 'b')
      edges.emplace_back(i + 1, i);
    else
      throw ParseError(std::string("zigzag orientation must use '<' or '>', got '") + c + "'");
    labels.push_back(std::to_string(i + 2));
  }
  return std::make_shared<const Poset>(Poset::from_hasse(orientation.size() + 1, edges, labels));
}

PosetPtr make_bipath(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw ShapeError("bipath lengths must be positive");
  const std::size_t top = n + m + 1;
  std::vector<std::string> labels{"0^"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) labels.push_back(std::to_string(i) + "'");
  labels.push_back("1^");
  std::vector<Arrow> edges;
  Element prev = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.emplace_back(prev, i);
    prev = i;
  }
  edges.emplace_back(prev, top);
  prev = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  edges.emplace_back(prev, top);
  return std::make_shared<const Poset>(Poset::from_hasse(top + 1, edges, labels));
}

} // namespace intmult
