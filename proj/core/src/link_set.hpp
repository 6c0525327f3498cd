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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace softsched::detail {

// Fixed-size bit set over link indices.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t capacity() const noexcept { return n_; }

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  LinkSet& operator&=(const LinkSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend LinkSet operator&(LinkSet a, const LinkSet& b) { return a &= b; }

  /// Bits set here and not in `o`.
  LinkSet minus(const LinkSet& o) const {
    LinkSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
    return r;
  }

  std::size_t intersection_count(const LinkSet& o) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    }
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace softsched::detail
