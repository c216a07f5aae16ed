#pragma once

#include "klcat/coxeter.hpp"
#include "klcat/laurent.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace klcat {

/// One root-to-leaf path of the light-leaves tree of an expression, reduced
/// to what the graded Grothendieck group sees: where it ends and its degree.
///
/// bits[k] is the decision taken at tree level k+1: 1 = move (x -> ux),
/// 0 = stay at x. A stay contributes +1 when ux > x and -1 when ux < x;
/// a move always contributes 0.
struct LeafPath {
  std::vector<std::uint8_t> bits;
  Element endpoint;
  int degree = 0;
  bool operator==(const LeafPath&) const = default;
};

struct LeafSet {
  Word word;
  std::vector<LeafPath> paths;  // bit-lexicographic order
};

enum class WalkDirection {
  /// Levels consume the last letter first and multiply on the left.
  right_to_left,
  /// Mirror image: first letter first, multiplying on the right.
  left_to_right,
};

LeafSet enumerate_leaves(const GroupTable& t, const Word& word,
                         WalkDirection direction = WalkDirection::right_to_left);

/// Sum of v^degree over leaves ending at x.
LaurentPoly cell_character(const GroupTable& t, const Word& word, Element x);
/// cell_character for every endpoint at once.
std::map<Element, LaurentPoly> cell_characters(const LeafSet& leaves);

struct LeafSplit {
  std::vector<LeafPath> first;   // Y1
  std::vector<LeafPath> second;  // Y2
};

/// Partition of the leaves ending at x by the last level (the first letter s):
///   sx < x:  Y1 = moved from sx (degree +0),  Y2 = stayed at x (degree -1)
///   sx > x:  Y1 = stayed at x (degree +1),    Y2 = moved from sx (degree +0)
LeafSplit split_top_generator(const GroupTable& t, const Word& word, Element x);

nlohmann::json to_json(const GroupTable& t, const LeafSet& leaves);

}  // namespace klcat
