#include "klcat/leaves.hpp"

#include <stdexcept>

namespace klcat {

LeafSet enumerate_leaves(const GroupTable& t, const Word& word, WalkDirection direction) {
  check_word(t.matrix(), word);
  const std::size_t n = word.size();
  if (n > 30) throw std::invalid_argument("expression too long to enumerate 2^n leaves");
  const Side side = direction == WalkDirection::right_to_left ? Side::left : Side::right;

  LeafSet out{word, {}};
  out.paths.reserve(std::size_t{1} << n);
  LeafPath current{{}, t.identity(), 0};
  current.bits.reserve(n);

  // Depth-first with "stay" (bit 0) explored before "move" (bit 1), which
  // yields the paths in bit-lexicographic order.
  auto walk = [&](auto&& self, std::size_t level) -> void {
    if (level == n) {
      out.paths.push_back(current);
      return;
    }
    const Generator u =
        direction == WalkDirection::right_to_left ? word[n - 1 - level] : word[level];
    const Element x = current.endpoint;
    const Element ux = t.mult(x, u, side);
    const int stay = t.length(ux) > t.length(x) ? +1 : -1;

    current.bits.push_back(0);
    current.degree += stay;
    self(self, level + 1);
    current.degree -= stay;
    current.bits.back() = 1;
    current.endpoint = ux;
    self(self, level + 1);
    current.endpoint = x;
    current.bits.pop_back();
  };
  walk(walk, 0);
  return out;
}

std::map<Element, LaurentPoly> cell_characters(const LeafSet& leaves) {
  std::map<Element, LaurentPoly> out;
  for (const auto& p : leaves.paths) out[p.endpoint] += LaurentPoly::monomial(1, p.degree);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LaurentPoly cell_character(const GroupTable& t, const Word& word, Element x) {
  LaurentPoly out;
  for (const auto& p : enumerate_leaves(t, word).paths)
    if (p.endpoint == x) out += LaurentPoly::monomial(1, p.degree);
  return out;
}

LeafSplit split_top_generator(const GroupTable& t, const Word& word, Element x) {
  if (word.empty()) throw std::invalid_argument("cannot split the leaves of the empty expression");
  const Generator s = word.front();
  const std::optional<Element> sx = t.try_mult(x, s, Side::left);
  const bool descent = sx && t.length(*sx) < t.length(x);
  // With sx < x the moves land in Y1; with sx > x the stays do.
  const std::uint8_t first_bit = descent ? 1 : 0;

  LeafSplit out;
  for (auto& p : enumerate_leaves(t, word).paths) {
    if (p.endpoint != x) continue;
    (p.bits.back() == first_bit ? out.first : out.second).push_back(std::move(p));
  }
  return out;
}

nlohmann::json to_json(const GroupTable& t, const LeafSet& leaves) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : leaves.paths) {
    std::string bits;
    for (auto b : p.bits) bits.push_back(b ? '1' : '0');
    paths.push_back({{"bits", bits}, {"endpoint", t.word(p.endpoint)}, {"degree", p.degree}});
  }
  return {{"word", leaves.word}, {"bit_convention", "1=move,0=stay"}, {"paths", std::move(paths)}};
}

}  // namespace klcat
