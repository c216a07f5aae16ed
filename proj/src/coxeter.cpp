#include "klcat/coxeter.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace klcat {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<std::vector<int>> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ <= 0) throw std::invalid_argument("Coxeter matrix rank must be positive");
  if (entries_.size() != static_cast<std::size_t>(rank_))
    throw std::invalid_argument("Coxeter matrix must have rank rows");
  for (int s = 0; s < rank_; ++s) {
    if (entries_[s].size() != static_cast<std::size_t>(rank_))
      throw std::invalid_argument("Coxeter matrix must be square");
    for (int t = 0; t < rank_; ++t) {
      const int m = entries_[s][t];
      if (s == t) {
        if (m != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
      } else if (m != kInfinity && m < 2) {
        throw std::invalid_argument("off-diagonal Coxeter entries must be >= 2 or 0 (infinity)");
      }
      if (m != entries_[t][s]) throw std::invalid_argument("Coxeter matrix must be symmetric");
    }
  }
}

void to_json(nlohmann::json& j, const CoxeterMatrix& m) {
  j = nlohmann::json{{"rank", m.rank()}, {"m", m.entries()}};
}

CoxeterMatrix coxeter_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("m"))
    throw std::invalid_argument(R"(matrix JSON must look like {"rank": n, "m": [[...]]})");
  try {
    return CoxeterMatrix(j.at("rank").get<int>(), j.at("m").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
  }
}

void check_word(const CoxeterMatrix& m, const Word& word) {
  for (Generator s : word)
    if (s < 0 || s >= m.rank())
      throw std::invalid_argument("generator index " + std::to_string(s) + " out of range");
}

// Level-by-level enumeration. For a new element y = x*s (x of length L, s not
// a right descent of x) the left descents are D_L(x) plus every t with
// t*x = x*s; the normal form is then (min D_L(y)) followed by the normal form
// of what remains.
GroupTable GroupTable::build(const CoxeterMatrix& matrix, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("group cap must be positive");
  GroupTable t(matrix);
  const int rank = matrix.rank();
  t.words_.push_back({});
  t.lengths_.push_back(0);
  t.left_.assign(rank, kNone);
  t.right_.assign(rank, kNone);
  t.level_start_ = {0, 1};

  for (int len = 0;; ++len) {
    const std::uint32_t lo = t.level_start_[len];
    const std::uint32_t hi = t.level_start_[len + 1];

    struct Candidate {
      std::vector<std::pair<std::uint32_t, Generator>> right_parents;  // (x, s) with x*s = y
      std::vector<std::pair<Generator, std::uint32_t>> left_down;      // (t, t*y)
    };
    std::map<Word, Candidate> next;

    for (std::uint32_t xi = lo; xi < hi; ++xi) {
      const Element x{xi};
      for (Generator s = 0; s < rank; ++s) {
        if (t.lookup(t.right_, x, s) != kNone) continue;
        Candidate fresh;
        Generator first = -1;
        std::uint32_t rest = kNone;
        for (Generator u = 0; u < rank; ++u) {
          std::uint32_t down = kNone;
          if (t.is_descent(x, u, Side::left)) {
            down = t.lookup(t.right_, Element{t.lookup(t.left_, x, u)}, s);
          } else if (t.conjugates_to(x, u, s)) {
            down = xi;
          }
          if (down == kNone) continue;
          fresh.left_down.emplace_back(u, down);
          if (first < 0) {
            first = u;
            rest = down;
          }
        }
        Word nf;
        nf.reserve(len + 1);
        nf.push_back(first);
        const Word& tail = t.words_[rest];
        nf.insert(nf.end(), tail.begin(), tail.end());
        auto [it, inserted] = next.try_emplace(std::move(nf), std::move(fresh));
        it->second.right_parents.emplace_back(xi, s);
      }
    }

    if (next.empty()) break;
    if (t.size() + next.size() > cap) {
      t.partial_ = true;
      break;
    }

    std::uint32_t id = static_cast<std::uint32_t>(t.size());
    t.words_.reserve(t.size() + next.size());
    t.left_.resize((t.size() + next.size()) * rank, kNone);
    t.right_.resize((t.size() + next.size()) * rank, kNone);
    for (auto& [nf, cand] : next) {
      t.words_.push_back(nf);
      t.lengths_.push_back(len + 1);
      for (auto [xi, s] : cand.right_parents) {
        t.slot(t.right_, xi, s) = id;
        t.slot(t.right_, id, s) = xi;
      }
      for (auto [u, down] : cand.left_down) {
        t.slot(t.left_, id, u) = down;
        t.slot(t.left_, down, u) = id;
      }
      ++id;
    }
    t.level_start_.push_back(id);
  }

  t.build_intervals();
  return t;
}

// Decides x^{-1} t x = s, given t*x > x and x*s > x. Pick a right descent r of
// x and split off the maximal right factor d in <r,s>. The reflection d s d^-1
// is simple only when l(d) = m_rs - 1, in which case it is w0 s w0; otherwise
// no simple reflection t can conjugate to it past a minimal coset
// representative.
bool GroupTable::conjugates_to(Element x, Generator t, Generator s) const {
  for (;;) {
    if (x.id == 0) return t == s;
    Generator r = 0;
    while (!is_descent(x, r, Side::right)) ++r;
    const int m = matrix_.m(r, s);
    if (m == CoxeterMatrix::kInfinity) return false;
    int peeled = 0;
    Generator next = r;
    while (peeled < m - 1 && is_descent(x, next, Side::right)) {
      x = Element{lookup(right_, x, next)};
      ++peeled;
      next = next == r ? s : r;
    }
    if (peeled != m - 1) return false;
    if (m % 2 == 1) s = r;
  }
}

void GroupTable::build_intervals() {
  const std::size_t n = size();
  const std::size_t blocks = (n + 63) / 64;
  intervals_.assign(n, std::vector<std::uint64_t>(blocks, 0));
  intervals_[0][0] = 1;
  for (std::uint32_t wi = 1; wi < n; ++wi) {
    const Element w{wi};
    Generator s = 0;
    while (!is_descent(w, s, Side::left)) ++s;
    const auto& lower = intervals_[lookup(left_, w, s)];
    auto& mine = intervals_[wi];
    mine = lower;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::uint64_t bits = lower[b];
      while (bits) {
        const int bit = __builtin_ctzll(bits);
        bits &= bits - 1;
        const std::uint32_t x = static_cast<std::uint32_t>(b * 64 + bit);
        const std::uint32_t sx = lookup(left_, Element{x}, s);
        mine[sx / 64] |= std::uint64_t{1} << (sx % 64);
      }
    }
  }
}

std::vector<Element> GroupTable::elements() const {
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = element(i);
  return out;
}

std::vector<Element> GroupTable::elements_of_length(int length) const {
  std::vector<Element> out;
  if (length < 0 || length > complete_length()) return out;
  for (std::uint32_t i = level_start_[length]; i < level_start_[length + 1]; ++i)
    out.push_back(Element{i});
  return out;
}

std::size_t GroupTable::count_of_length(int length) const {
  if (length < 0 || length > complete_length()) return 0;
  return level_start_[length + 1] - level_start_[length];
}

std::optional<Element> GroupTable::find(const Word& canonical) const {
  const int len = static_cast<int>(canonical.size());
  if (len > complete_length()) return std::nullopt;
  auto first = words_.begin() + level_start_[len];
  auto last = words_.begin() + level_start_[len + 1];
  auto it = std::lower_bound(first, last, canonical);
  if (it == last || *it != canonical) return std::nullopt;
  return Element{static_cast<std::uint32_t>(it - words_.begin())};
}

std::optional<Element> GroupTable::try_mult(Element w, Generator s, Side side) const {
  const std::uint32_t r = lookup(side == Side::left ? left_ : right_, w, s);
  if (r == kNone) return std::nullopt;
  return Element{r};
}

Element GroupTable::mult(Element w, Generator s, Side side) const {
  if (auto r = try_mult(w, s, side)) return *r;
  throw PartialTableError("product leaves the enumerated table (length > " +
                          std::to_string(complete_length()) + ")");
}

bool GroupTable::is_descent(Element w, Generator s, Side side) const {
  const std::uint32_t r = lookup(side == Side::left ? left_ : right_, w, s);
  return r != kNone && lengths_[r] < lengths_[w.id];
}

std::vector<Generator> GroupTable::descents(Element w, Side side) const {
  std::vector<Generator> out;
  for (Generator s = 0; s < rank(); ++s)
    if (is_descent(w, s, side)) out.push_back(s);
  return out;
}

Element GroupTable::evaluate(const Word& word) const {
  check_word(matrix_, word);
  Element w = identity();
  for (Generator s : word) w = mult(w, s, Side::right);
  return w;
}

bool GroupTable::is_reduced(const Word& word) const {
  check_word(matrix_, word);
  Element w = identity();
  for (Generator s : word) {
    if (is_descent(w, s, Side::right)) return false;
    w = mult(w, s, Side::right);
  }
  return true;
}

bool GroupTable::bruhat_leq(Element x, Element w) const {
  return (intervals_[w.id][x.id / 64] >> (x.id % 64)) & 1U;
}

std::vector<Element> GroupTable::bruhat_interval(Element w) const {
  std::vector<Element> out;
  const auto& bits = intervals_[w.id];
  for (std::size_t b = 0; b < bits.size(); ++b) {
    std::uint64_t word = bits[b];
    while (word) {
      out.push_back(Element{static_cast<std::uint32_t>(b * 64 + __builtin_ctzll(word))});
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Word> GroupTable::all_reduced_words(Element w) const {
  std::map<std::uint32_t, std::vector<Word>> memo;
  auto rec = [&](auto&& self, Element y) -> const std::vector<Word>& {
    if (auto it = memo.find(y.id); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (y.id == 0) {
      out.push_back({});
    } else {
      for (Generator s : descents(y, Side::left)) {
        for (const Word& tail : self(self, mult(y, s, Side::left))) {
          Word word{s};
          word.insert(word.end(), tail.begin(), tail.end());
          out.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(y.id, std::move(out)).first->second;
  };
  return rec(rec, w);
}

}  // namespace klcat
