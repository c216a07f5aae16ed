#pragma once

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klcat {

using Generator = int;
using Word = std::vector<Generator>;

enum class Side { left, right };

/// Symmetric Coxeter matrix; an entry of 0 stands for m_st = infinity.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix(int rank, std::vector<std::vector<int>> entries);

  int rank() const { return rank_; }
  int m(Generator s, Generator t) const { return entries_[s][t]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  int rank_;
  std::vector<std::vector<int>> entries_;
};

// {"rank": n, "m": [[...]]}, 0 encodes infinity.
void to_json(nlohmann::json& j, const CoxeterMatrix& m);
CoxeterMatrix coxeter_matrix_from_json(const nlohmann::json& j);

/// Handle to an element interned in a GroupTable. Ids are assigned in
/// (length, ShortLex) order, so comparing ids compares the canonical order.
struct Element {
  std::uint32_t id = 0;
  auto operator<=>(const Element&) const = default;
};

/// A product left the enumerated part of a length-truncated table.
class PartialTableError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class GroupTable {
 public:
  /// Enumerates W level by level from e. If the next length stratum would push
  /// the element count over `cap`, enumeration stops and the table is partial:
  /// it then holds exactly the elements of length <= complete_length().
  static GroupTable build(const CoxeterMatrix& matrix, std::size_t cap);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  std::size_t size() const { return words_.size(); }
  bool is_partial() const { return partial_; }
  int complete_length() const { return static_cast<int>(level_start_.size()) - 2; }
  Element identity() const { return Element{0}; }
  Element element(std::size_t index) const { return Element{static_cast<std::uint32_t>(index)}; }
  std::vector<Element> elements() const;
  std::vector<Element> elements_of_length(int length) const;
  std::size_t count_of_length(int length) const;

  int length(Element w) const { return lengths_[w.id]; }
  /// ShortLex-minimal reduced word.
  const Word& word(Element w) const { return words_[w.id]; }
  std::optional<Element> find(const Word& canonical) const;

  Element mult(Element w, Generator s, Side side) const;
  std::optional<Element> try_mult(Element w, Generator s, Side side) const;
  bool is_descent(Element w, Generator s, Side side) const;
  std::vector<Generator> descents(Element w, Side side) const;

  /// Left-to-right product of the letters.
  Element evaluate(const Word& word) const;
  bool is_reduced(const Word& word) const;

  bool bruhat_leq(Element x, Element w) const;
  /// {x : x <= w} in (length, ShortLex) order.
  std::vector<Element> bruhat_interval(Element w) const;
  std::vector<Word> all_reduced_words(Element w) const;

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  explicit GroupTable(CoxeterMatrix m) : matrix_(std::move(m)) {}
  std::uint32_t& slot(std::vector<std::uint32_t>& table, std::uint32_t id, Generator s) {
    return table[static_cast<std::size_t>(id) * rank() + s];
  }
  std::uint32_t lookup(const std::vector<std::uint32_t>& table, Element w, Generator s) const {
    return table[static_cast<std::size_t>(w.id) * rank() + s];
  }
  bool conjugates_to(Element x, Generator t, Generator s) const;
  void build_intervals();

  CoxeterMatrix matrix_;
  bool partial_ = false;
  std::vector<Word> words_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  // level_start_[L] = first id of length L; last entry is size().
  std::vector<std::uint32_t> level_start_;
  std::vector<std::vector<std::uint64_t>> intervals_;
};

void check_word(const CoxeterMatrix& m, const Word& word);

}  // namespace klcat
