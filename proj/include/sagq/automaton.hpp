// Copyright 2026 The sagq Authors
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

// Forbidden-factor automaton: an Aho-Corasick machine over an integer
// alphabet whose accepting states mean "some pattern occurred as a
// contiguous factor of the input read so far".

#ifndef SAGQ_AUTOMATON_HPP_
#define SAGQ_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <queue>
#include <span>
#include <vector>

namespace sagq {

class FactorAutomaton {
 public:
  using State = std::uint32_t;
  static constexpr State root = 0;

  FactorAutomaton() : alphabet_size_(0), delta_(), match_(1, false) {}

  FactorAutomaton(std::size_t alphabet_size,
                  std::span<std::vector<std::size_t> const> patterns)
      : alphabet_size_(alphabet_size) {
    constexpr State none = static_cast<State>(-1);
    // Trie.
    std::vector<std::vector<State>> child(1,
                                          std::vector<State>(alphabet_size, none));
    match_.assign(1, false);
    for (auto const& pattern : patterns) {
      State s = root;
      for (std::size_t symbol : pattern) {
        if (child[s][symbol] == none) {
          child[s][symbol] = static_cast<State>(child.size());
          child.emplace_back(alphabet_size, none);
          match_.push_back(false);
        }
        s = child[s][symbol];
      }
      match_[s] = true;
    }
    // Failure links, completed into a full transition table.
    std::size_t const n = child.size();
    delta_.assign(n * alphabet_size, root);
    std::vector<State> fail(n, root);
    std::queue<State>  queue;
    for (std::size_t x = 0; x < alphabet_size; ++x) {
      State c = child[root][x];
      if (c != none) {
        fail[c] = root;
        delta_[x] = c;
        queue.push(c);
      }
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop();
      match_[s] = match_[s] || match_[fail[s]];
      for (std::size_t x = 0; x < alphabet_size; ++x) {
        State c = child[s][x];
        if (c != none) {
          fail[c] = delta_[fail[s] * alphabet_size + x];
          delta_[s * alphabet_size + x] = c;
          queue.push(c);
        } else {
          delta_[s * alphabet_size + x] = delta_[fail[s] * alphabet_size + x];
        }
      }
    }
    // Accepting states absorb: once a factor has matched it stays matched.
    for (std::size_t s = 0; s < n; ++s) {
      if (match_[s]) {
        for (std::size_t x = 0; x < alphabet_size; ++x) {
          delta_[s * alphabet_size + x] = static_cast<State>(s);
        }
      }
    }
  }

  std::size_t num_states() const noexcept { return match_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  State step(State s, std::size_t symbol) const {
    return delta_[s * alphabet_size_ + symbol];
  }

  bool is_match(State s) const { return match_[s]; }

  template <typename Range>
  bool contains_factor(Range const& word) const {
    State s = root;
    for (auto symbol : word) {
      s = step(s, static_cast<std::size_t>(symbol));
      if (match_[s]) {
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t        alphabet_size_;
  std::vector<State> delta_;
  std::vector<bool>  match_;
};

}  // namespace sagq

#endif  // SAGQ_AUTOMATON_HPP_
