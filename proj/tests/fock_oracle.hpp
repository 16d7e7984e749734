#pragma once

// Brute-force truncated Fock-space representation over two modes.
// Symbols: a1, a2 annihilate and b1dag, b2dag create in modes 1 and 2.
// Bosons use a|n> = n|n-1>, adag|n> = |n+1> (similar to the usual
// representation, same vacuum expectation values, integer entries).
// Fermions use a Jordan-Wigner sign; the -1 table is realized as
// c = eta^-1 (ddag)^+ eta with eta = (-1)^N.

#include "spinstat/fock.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace spinstat::oracle {

enum class TableKind { Bose, FermiPlus, FermiMinus };

inline const std::array<std::string, 4> kSymbols{"a1", "a2", "b1dag", "b2dag"};

inline RelationTable make_table(TableKind kind) {
  RelationTable t(kind == TableKind::Bose ? Bracket::Commutator : Bracket::Anticommutator);
  const Scalar v = kind == TableKind::FermiMinus ? Scalar(-1) : Scalar(1);
  t.add_pair("a1", "b1dag", v);
  t.add_pair("a2", "b2dag", v);
  return t;
}

class TruncatedFock {
 public:
  explicit TruncatedFock(TableKind kind, int cutoff = 4)
      : kind_(kind), levels_(kind == TableKind::Bose ? cutoff + 1 : 2) {}

  std::size_t dim() const { return static_cast<std::size_t>(levels_ * levels_); }
  std::size_t index(int n1, int n2) const { return static_cast<std::size_t>(n1 * levels_ + n2); }

  /// Applies symbol k of kSymbols to a state vector.
  std::vector<std::int64_t> apply(std::size_t k, const std::vector<std::int64_t>& v) const {
    std::vector<std::int64_t> out(dim(), 0);
    const bool create = k >= 2;
    const int mode = static_cast<int>(k % 2);
    for (int n1 = 0; n1 < levels_; ++n1)
      for (int n2 = 0; n2 < levels_; ++n2) {
        const std::int64_t amp = v[index(n1, n2)];
        if (amp == 0) continue;
        int m1 = n1, m2 = n2;
        int& n = mode == 0 ? m1 : m2;
        std::int64_t factor = 1;
        if (create) {
          if (n + 1 >= levels_) continue;  // truncated away
          ++n;
        } else {
          if (n == 0) continue;
          if (kind_ == TableKind::Bose) factor = n;
          --n;
        }
        if (kind_ != TableKind::Bose) {
          if (mode == 1 && n1 == 1) factor = -factor;  // Jordan-Wigner string
          if (kind_ == TableKind::FermiMinus && !create) factor = -factor;
        }
        out[index(m1, m2)] += factor * amp;
      }
    return out;
  }

  std::vector<std::int64_t> vacuum() const {
    std::vector<std::int64_t> v(dim(), 0);
    v[0] = 1;
    return v;
  }

  /// <0| w |0> for symbol indices in word order.
  std::int64_t vacuum_expectation(const std::vector<std::size_t>& word) const {
    std::vector<std::int64_t> v = vacuum();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
    return v[0];
  }

  /// <u| eta |v>: eta = n1! n2! for bosons (the representation above is not
  /// unitary), (-1)^N for the -1 table, 1 otherwise.
  std::int64_t metric_product(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) const {
    std::int64_t s = 0;
    for (int n1 = 0; n1 < levels_; ++n1)
      for (int n2 = 0; n2 < levels_; ++n2) {
        std::int64_t eta = kind_ == TableKind::FermiMinus && (n1 + n2) % 2 == 1 ? -1 : 1;
        if (kind_ == TableKind::Bose) eta = factorial(n1) * factorial(n2);
        s += u[index(n1, n2)] * eta * v[index(n1, n2)];
      }
    return s;
  }

 private:
  static std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

  TableKind kind_;
  int levels_;
};

/// Calls f(word) for every word over kSymbols of length 0..max_len.
template <typename F>
void for_each_word(std::size_t max_len, F&& f) {
  std::vector<std::size_t> word;
  for (std::size_t len = 0; len <= max_len; ++len) {
    word.assign(len, 0);
    while (true) {
      f(word);
      std::size_t p = 0;
      while (p < len && ++word[p] == kSymbols.size()) word[p++] = 0;
      if (p == len) break;
    }
  }
}

}  // namespace spinstat::oracle
