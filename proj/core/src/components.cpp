// Copyright 2026 The softsched Authors.
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

#include "softsched/components.hpp"

#include <algorithm>
#include <string>

#include "link_set.hpp"
#include "softsched/error.hpp"

namespace softsched {

using detail::LinkSet;

bool Component::contains(int link) const {
  return std::binary_search(members.begin(), members.end(), link);
}

bool operator<(const Component& a, const Component& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

namespace {

// compatible[v]: links that may share a slot with v (v itself excluded).
std::vector<LinkSet> compatibility(const ConflictGraph& g) {
  const std::size_t n = g.size();
  std::vector<LinkSet> compat(n, LinkSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!g.conflicts(a, b)) compat[a].set(b);
    }
  }
  return compat;
}

[[noreturn]] void over_cap(std::size_t cap) {
  throw ResourceLimit("component enumeration exceeded the cap of " + std::to_string(cap) +
                          " components",
                      cap);
}

class MaximalSetSearch {
 public:
  MaximalSetSearch(const ConflictGraph& g, std::size_t cap)
      : compat_(compatibility(g)), n_(g.size()), cap_(cap) {}

  std::vector<Component> run() {
    LinkSet all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    if (n_ > 0) expand(all, LinkSet(n_));
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void expand(LinkSet candidates, LinkSet excluded) {
    if (candidates.none()) {
      if (excluded.none()) report();
      return;
    }
    // Tomita pivot: the vertex of P u X with the most candidate neighbours.
    std::size_t pivot = n_;
    std::size_t best = 0;
    auto consider = [&](std::size_t u) {
      const std::size_t c = candidates.intersection_count(compat_[u]);
      if (pivot == n_ || c > best) {
        pivot = u;
        best = c;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    const LinkSet branch = candidates.minus(compat_[pivot]);
    branch.for_each([&](std::size_t v) {
      current_.push_back(static_cast<int>(v));
      expand(candidates & compat_[v], excluded & compat_[v]);
      current_.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }

  void report() {
    if (found_.size() >= cap_) over_cap(cap_);
    Component c{current_};
    std::sort(c.members.begin(), c.members.end());
    found_.push_back(std::move(c));
  }

  std::vector<LinkSet> compat_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<int> current_;
  std::vector<Component> found_;
};

}  // namespace

std::vector<Component> enumerate_components(const ConflictGraph& g,
                                            std::optional<std::size_t> max_generation,
                                            std::size_t cap) {
  const std::size_t n = g.size();
  const std::size_t limit = max_generation.value_or(n);
  const auto compat = compatibility(g);

  struct Partial {
    Component component;
    LinkSet extensions;  // compatible with every member, index above the last
  };
  std::vector<Component> out;
  std::vector<Partial> frontier;
  if (limit == 0) return out;

  for (std::size_t v = 0; v < n; ++v) {
    if (out.size() >= cap) over_cap(cap);
    LinkSet ext = compat[v];
    for (std::size_t u = 0; u <= v; ++u) ext.reset(u);
    out.push_back(Component{{static_cast<int>(v)}});
    frontier.push_back({out.back(), std::move(ext)});
  }
  // Parents are visited in canonical order and extended by ascending index,
  // so each generation comes out already sorted.
  for (std::size_t gen = 2; gen <= limit && !frontier.empty(); ++gen) {
    std::vector<Partial> next;
    for (const Partial& p : frontier) {
      p.extensions.for_each([&](std::size_t v) {
        if (out.size() >= cap) over_cap(cap);
        Component child = p.component;
        child.members.push_back(static_cast<int>(v));
        LinkSet ext = p.extensions & compat[v];
        for (std::size_t u = 0; u <= v; ++u) ext.reset(u);
        out.push_back(child);
        next.push_back({std::move(child), std::move(ext)});
      });
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Component> prune_dominated(const std::vector<Component>& components) {
  std::vector<Component> kept;
  for (std::size_t a = 0; a < components.size(); ++a) {
    const auto& ma = components[a].members;
    bool dominated = false;
    for (std::size_t b = 0; b < components.size() && !dominated; ++b) {
      const auto& mb = components[b].members;
      dominated = mb.size() > ma.size() &&
                  std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
    }
    if (!dominated) kept.push_back(components[a]);
  }
  return kept;
}

std::vector<Component> enumerate_maximal(const ConflictGraph& g, std::size_t cap) {
  return MaximalSetSearch(g, cap).run();
}

}  // namespace softsched
