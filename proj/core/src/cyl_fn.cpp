#include "coeq/cyl_fn.hpp"

#include <algorithm>
#include <sstream>

namespace coeq {

CylFn::CylFn(ShiftSpace space, int depth, std::map<Word, long long> table)
    : space_(std::move(space)), depth_(depth), table_(std::move(table)) {
  if (depth_ < 0) raise(ErrorCode::PreconditionFailed, "negative depth");
  // The table must cover exactly B_depth: every admissible word, nothing else.
  std::vector<Word> words = admissible_words(space_, depth_);
  if (words.size() != table_.size()) {
    raise(ErrorCode::PreconditionFailed,
          "table must be defined on exactly the admissible words of length " +
              std::to_string(depth_));
  }
  for (const Word& w : words) {
    if (table_.find(w) == table_.end()) {
      raise(ErrorCode::PreconditionFailed,
            "table missing admissible word " + word_to_string(w));
    }
  }
}

CylFn CylFn::constant(const ShiftSpace& S, long long c) {
  return CylFn(S, 0, {{Word{}, c}});
}

CylFn CylFn::indicator(const ShiftSpace& S, const Word& w) {
  if (w.empty() || !S.admissible(w)) {
    raise(ErrorCode::Inadmissible,
          "indicator needs a nonempty admissible word, got " + word_to_string(w));
  }
  std::map<Word, long long> table;
  for (const Word& v : admissible_words(S, static_cast<int>(w.size()))) {
    table[v] = (v == w) ? 1 : 0;
  }
  return CylFn(S, static_cast<int>(w.size()), std::move(table));
}

std::string CylFn::to_string() const {
  std::ostringstream out;
  out << "depth " << depth_ << " {";
  bool first = true;
  for (const auto& [w, v] : table_) {
    if (!first) out << ", ";
    first = false;
    for (int a : w) out << a;
    out << "->" << v;
  }
  out << "}";
  return out.str();
}

long long eval(const CylFn& f, const EvPeriodicPoint& x) {
  if (f.space() != x.space) {
    raise(ErrorCode::SpaceMismatch, "function and point live on different spaces");
  }
  return f.table().at(prefix_of(x, f.depth()));
}

long long eval_word(const CylFn& f, const Word& w) {
  if (static_cast<int>(w.size()) < f.depth()) {
    raise(ErrorCode::WordTooShort,
          "need " + std::to_string(f.depth()) + " symbols, got " +
              std::to_string(w.size()));
  }
  if (!f.space().admissible(w)) {
    raise(ErrorCode::Inadmissible, "word not admissible: " + word_to_string(w));
  }
  return f.table().at(Word(w.begin(), w.begin() + f.depth()));
}

CylFn extend(const CylFn& f, int d) {
  if (d < f.depth()) {
    raise(ErrorCode::PreconditionFailed, "extension must not lower depth");
  }
  if (d == f.depth()) return f;
  std::map<Word, long long> table;
  for (const Word& w : admissible_words(f.space(), d)) {
    table[w] = f.table().at(Word(w.begin(), w.begin() + f.depth()));
  }
  return CylFn(f.space(), d, std::move(table));
}

namespace {

CylFn combine(const CylFn& f, const CylFn& g, long long cf, long long cg) {
  if (f.space() != g.space()) {
    raise(ErrorCode::SpaceMismatch, "operands live on different spaces");
  }
  int d = std::max(f.depth(), g.depth());
  CylFn fe = extend(f, d), ge = extend(g, d);
  std::map<Word, long long> table;
  for (const auto& [w, v] : fe.table()) {
    table[w] = cf * v + cg * ge.table().at(w);
  }
  return CylFn(f.space(), d, std::move(table));
}

}  // namespace

CylFn add(const CylFn& f, const CylFn& g) { return combine(f, g, 1, 1); }
CylFn sub(const CylFn& f, const CylFn& g) { return combine(f, g, 1, -1); }

CylFn negate(const CylFn& f) { return scale(-1, f); }

CylFn scale(long long c, const CylFn& f) {
  std::map<Word, long long> table;
  for (const auto& [w, v] : f.table()) table[w] = c * v;
  return CylFn(f.space(), f.depth(), std::move(table));
}

CylFn compose_shift(const CylFn& f) {
  int d = f.depth() + 1;
  std::map<Word, long long> table;
  for (const Word& w : admissible_words(f.space(), d)) {
    table[w] = f.table().at(Word(w.begin() + 1, w.end()));
  }
  return CylFn(f.space(), d, std::move(table));
}

bool equal_as_functions(const CylFn& f, const CylFn& g) {
  if (f.space() != g.space()) return false;
  int d = std::max(f.depth(), g.depth());
  return extend(f, d).table() == extend(g, d).table();
}

CylFn compressed(const CylFn& f) {
  CylFn cur = f;
  while (cur.depth() > 0) {
    // Drop to depth-1 iff the value never depends on the last symbol.
    std::map<Word, long long> shorter;
    bool factors = true;
    for (const auto& [w, v] : cur.table()) {
      Word prefix(w.begin(), w.end() - 1);
      auto it = shorter.find(prefix);
      if (it == shorter.end()) {
        shorter[prefix] = v;
      } else if (it->second != v) {
        factors = false;
        break;
      }
    }
    if (!factors) break;
    cur = CylFn(cur.space(), cur.depth() - 1, std::move(shorter));
  }
  return cur;
}

CylFn birkhoff(const CylFn& f, int m) {
  if (m < 0) raise(ErrorCode::PreconditionFailed, "negative Birkhoff length");
  if (m == 0) return CylFn::constant(f.space(), 0);
  int d = f.depth() + m - 1;
  std::map<Word, long long> table;
  for (const Word& w : admissible_words(f.space(), d)) {
    long long sum = 0;
    for (int i = 0; i < m; ++i) {
      sum += f.table().at(Word(w.begin() + i, w.begin() + i + f.depth()));
    }
    table[w] = sum;
  }
  return CylFn(f.space(), d, std::move(table));
}

long long birkhoff_at(const CylFn& f, const EvPeriodicPoint& x, long long m) {
  if (m < 0) raise(ErrorCode::PreconditionFailed, "negative Birkhoff length");
  if (f.space() != x.space) {
    raise(ErrorCode::SpaceMismatch, "function and point live on different spaces");
  }
  long long sum = 0;
  EvPeriodicPoint y = x;
  for (long long i = 0; i < m; ++i) {
    sum += eval(f, y);
    y = shift_evp(y, 1);
  }
  return sum;
}

long long omega(const CylFn& f, const EvPeriodicPoint& x, long long r,
                long long s) {
  if (r <= s || s < 0) {
    raise(ErrorCode::PreconditionFailed, "omega needs r > s >= 0");
  }
  if (!shift_evp(x, r).same_point(shift_evp(x, s))) {
    raise(ErrorCode::NotEventuallyPeriodicAt,
          "sigma^" + std::to_string(r) + "(x) != sigma^" + std::to_string(s) +
              "(x) at x = " + x.to_string());
  }
  return birkhoff_at(f, x, r) - birkhoff_at(f, x, s);
}

long long orbit_sum(const CylFn& f, const Orbit& gamma) {
  long long sum = 0;
  for (int i = 0; i < gamma.period(); ++i) {
    EvPeriodicPoint x =
        make_ev_periodic(f.space(), Word{}, rotate_left(gamma.cycle, i));
    sum += eval(f, x);
  }
  return sum;
}

}  // namespace coeq
