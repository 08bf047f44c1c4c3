#pragma once

#include "coeq/error.hpp"
#include "coeq/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coeq {

// A finite word over a shift-space alphabet.  Symbols are 1-based everywhere
// (files, reports, and in memory), matching the usual alphabet {1, ..., N}.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

// One-sided topological Markov shift presented by its 0-1 transition matrix:
// x_i x_{i+1} is allowed iff entries[x_i][x_{i+1}] == 1.  Instances are
// immutable once built; make_shift_space is the only way to get one, and it
// enforces: no zero row or column, irreducibility, and not a permutation
// matrix (permutation matrices present finite orbits only, on which none of
// the machinery here is meaningful).
class ShiftSpace {
 public:
  int alphabet_size() const { return n_; }
  bool entry(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)] != 0; }
  const std::vector<std::uint8_t>& raw_entries() const { return entries_; }

  bool operator==(const ShiftSpace& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }
  bool operator!=(const ShiftSpace& other) const { return !(*this == other); }

  // True iff every adjacent pair of w is an allowed transition and all symbols
  // are in range.  The empty word is admissible.
  bool admissible(const Word& w) const;

  friend ShiftSpace make_shift_space(const std::vector<std::vector<int>>& rows);

 private:
  ShiftSpace(int n, std::vector<std::uint8_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_ = 0;
  std::vector<std::uint8_t> entries_;  // row-major n x n
};

// Validates and constructs.  Throws Error with code ZeroRowOrColumn,
// NotIrreducible, or PermutationMatrix (checked in that order).
ShiftSpace make_shift_space(const std::vector<std::vector<int>>& rows);

// All admissible words of length k in lexicographic order.  k == 0 yields
// the empty word alone.
std::vector<Word> admissible_words(const ShiftSpace& S, int k);

// A periodic orbit, stored as the lexicographically least rotation of its
// (primitive) cycle word.  Two orbits are equal iff their canonical cycles
// are equal.
struct Orbit {
  Word cycle;

  int period() const { return static_cast<int>(cycle.size()); }
  std::string to_string() const;  // e.g. "(12)"
  bool operator==(const Orbit& o) const { return cycle == o.cycle; }
  bool operator!=(const Orbit& o) const { return cycle != o.cycle; }
  bool operator<(const Orbit& o) const {
    if (cycle.size() != o.cycle.size()) return cycle.size() < o.cycle.size();
    return cycle < o.cycle;
  }
};

// Lexicographically least rotation (naive scan; word lengths here are tiny).
Word least_rotation(const Word& w);

// True iff w is not a power of a strictly shorter word.
bool is_primitive(const Word& w);

// Left rotation by m (m may exceed |w|; w must be nonempty).
Word rotate_left(const Word& w, long long m);

// All periodic orbits of period <= P, sorted by (period, cycle).  Exact
// enumeration: closed admissible walks, anchored at their lexicographically
// least rotation, filtered to primitive words.
std::vector<Orbit> periodic_orbits_up_to(const ShiftSpace& S, int P);

// |Per_p| = trace(A^p), computed exactly.  p >= 1.
BigInt per_count(const ShiftSpace& S, int p);

// Higher-block recoding: the shift over alphabet B_k(S) together with the
// relabeling in both directions.  New symbols are 1-based indices into the
// lexicographic ordering of B_k(S).  k == 1 is the identity recoding.
struct HigherBlock {
  ShiftSpace space;
  std::vector<Word> symbol_words;   // new symbol s  ->  symbol_words[s-1]
  std::map<Word, int> word_symbol;  // inverse map
};

HigherBlock higher_block(const ShiftSpace& S, int k);

}  // namespace coeq
