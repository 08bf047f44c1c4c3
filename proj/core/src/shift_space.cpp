#include "coeq/shift_space.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace coeq {

std::string word_to_string(const Word& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ']';
  return out.str();
}

bool ShiftSpace::admissible(const Word& w) const {
  for (int a : w) {
    if (a < 1 || a > n_) return false;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!entry(w[i], w[i + 1])) return false;
  }
  return true;
}

namespace {

// Strong connectivity via forward and backward reachability from vertex 1.
bool strongly_connected(int n, const std::vector<std::uint8_t>& e) {
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        bool edge = forward ? e[v * n + w] : e[w * n + v];
        if (edge && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
  };
  return reach(true) && reach(false);
}

}  // namespace

ShiftSpace make_shift_space(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n < 1) raise(ErrorCode::PreconditionFailed, "empty matrix");
  std::vector<std::uint8_t> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      raise(ErrorCode::PreconditionFailed, "matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        raise(ErrorCode::PreconditionFailed, "matrix entries must be 0 or 1");
      }
      e[i * n + j] = static_cast<std::uint8_t>(rows[i][j]);
    }
  }
  for (int i = 0; i < n; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row += e[i * n + j];
      col += e[j * n + i];
    }
    if (row == 0) {
      raise(ErrorCode::ZeroRowOrColumn, "row " + std::to_string(i + 1) + " is zero");
    }
    if (col == 0) {
      raise(ErrorCode::ZeroRowOrColumn, "column " + std::to_string(i + 1) + " is zero");
    }
  }
  if (!strongly_connected(n, e)) {
    raise(ErrorCode::NotIrreducible, "transition graph is not strongly connected");
  }
  bool permutation = true;
  for (int i = 0; i < n && permutation; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row += e[i * n + j];
      col += e[j * n + i];
    }
    permutation = (row == 1 && col == 1);
  }
  if (permutation) {
    raise(ErrorCode::PermutationMatrix,
          "permutation matrices present only finite orbits");
  }
  return ShiftSpace(n, std::move(e));
}

std::vector<Word> admissible_words(const ShiftSpace& S, int k) {
  if (k < 0) raise(ErrorCode::PreconditionFailed, "negative word length");
  std::vector<Word> words{Word{}};
  for (int step = 0; step < k; ++step) {
    std::vector<Word> next;
    for (const Word& w : words) {
      for (int a = 1; a <= S.alphabet_size(); ++a) {
        if (!w.empty() && !S.entry(w.back(), a)) continue;
        Word e = w;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    }
    words = std::move(next);
  }
  // Extension in symbol order keeps the list lexicographically sorted.
  return words;
}

std::string Orbit::to_string() const {
  std::string s = "(";
  for (int a : cycle) s += std::to_string(a);
  return s + ")";
}

Word least_rotation(const Word& w) {
  Word best = w;
  Word cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

bool is_primitive(const Word& w) {
  int p = static_cast<int>(w.size());
  for (int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < p && repeats; ++i) {
      repeats = (w[i] == w[i - d]);
    }
    if (repeats) return false;
  }
  return true;
}

Word rotate_left(const Word& w, long long m) {
  if (w.empty()) raise(ErrorCode::PreconditionFailed, "rotation of empty word");
  long long p = static_cast<long long>(w.size());
  long long r = ((m % p) + p) % p;
  Word out = w;
  std::rotate(out.begin(), out.begin() + r, out.end());
  return out;
}

std::vector<Orbit> periodic_orbits_up_to(const ShiftSpace& S, int P) {
  if (P < 0) raise(ErrorCode::PreconditionFailed, "negative period bound");
  std::vector<Orbit> orbits;
  Word walk;
  // DFS over admissible walks whose symbols all stay >= the start symbol; a
  // closed walk is kept iff its word is primitive and is its own least
  // rotation, so every orbit is produced exactly once.
  std::function<void(int)> grow = [&](int start) {
    int last = walk.back();
    if (S.entry(last, start) && is_primitive(walk) &&
        least_rotation(walk) == walk) {
      orbits.push_back(Orbit{walk});
    }
    if (static_cast<int>(walk.size()) == P) return;
    for (int a = start; a <= S.alphabet_size(); ++a) {
      if (!S.entry(last, a)) continue;
      walk.push_back(a);
      grow(start);
      walk.pop_back();
    }
  };
  for (int start = 1; start <= S.alphabet_size() && P > 0; ++start) {
    walk.assign(1, start);
    grow(start);
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

BigInt per_count(const ShiftSpace& S, int p) {
  if (p < 1) raise(ErrorCode::PreconditionFailed, "period must be >= 1");
  int n = S.alphabet_size();
  std::vector<BigInt> power(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      power[i * n + j] = S.entry(i + 1, j + 1) ? 1 : 0;
    }
  }
  auto mul_by_base = [&](const std::vector<BigInt>& m) {
    std::vector<BigInt> out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (m[i * n + k] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (S.entry(k + 1, j + 1)) out[i * n + j] += m[i * n + k];
        }
      }
    }
    return out;
  };
  for (int step = 1; step < p; ++step) power = mul_by_base(power);
  BigInt trace = 0;
  for (int i = 0; i < n; ++i) trace += power[i * n + i];
  return trace;
}

HigherBlock higher_block(const ShiftSpace& S, int k) {
  if (k < 1) raise(ErrorCode::PreconditionFailed, "block length must be >= 1");
  std::vector<Word> blocks = admissible_words(S, k);
  std::map<Word, int> index;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    index[blocks[i]] = static_cast<int>(i) + 1;
  }
  int m = static_cast<int>(blocks.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // w -> w' iff the (k-1)-overlap matches and the junction transition is
      // allowed.  For k >= 2 the junction is already inside w' (admissible by
      // construction); for k == 1 it is the original matrix entry.
      bool edge = true;
      for (int t = 1; t < k && edge; ++t) {
        edge = (blocks[i][t] == blocks[j][t - 1]);
      }
      if (edge) edge = S.entry(blocks[i][k - 1], blocks[j][k - 1]);
      rows[i][j] = edge ? 1 : 0;
    }
  }
  return HigherBlock{make_shift_space(rows), std::move(blocks), std::move(index)};
}

}  // namespace coeq
