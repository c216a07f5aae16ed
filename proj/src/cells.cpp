#include "klcat/cells.hpp"

#include <algorithm>

namespace klcat {

void require_reduced(const GroupTable& t, const Word& word) {
  if (!t.is_reduced(word)) throw NotReducedError("expression is not reduced");
}

LaurentPoly CellDatum::decomposition(Element x, Element y) const {
  auto it = decomp.find({x, y});
  return it == decomp.end() ? LaurentPoly{} : it->second;
}

LaurentPoly CellDatum::cell_char(Element x) const {
  auto it = cell_chars.find(x);
  return it == cell_chars.end() ? LaurentPoly{} : it->second;
}

bool CellDatum::in_lambda0(Element y) const {
  return std::binary_search(lambda0.begin(), lambda0.end(), y);
}

std::vector<Element> compute_lambda0(const KLTable& k, const Word& word) {
  require_reduced(k.table(), word);
  std::vector<Element> out;
  for (const auto& [y, c] : expand_in_kl_basis(k, kl_word_product(k.table(), word)))
    out.push_back(y);
  return out;
}

CellDatum build_cell_datum(const KLTable& k, const Word& word) {
  const GroupTable& t = k.table();
  require_reduced(t, word);
  CellDatum d;
  d.word = word;
  d.top = t.evaluate(word);
  d.lambda = t.bruhat_interval(d.top);

  d.simple_gdims = expand_in_kl_basis(k, kl_word_product(t, word));
  for (const auto& [y, c] : d.simple_gdims) d.lambda0.push_back(y);

  for (Element y : d.lambda0)
    for (Element x : d.lambda) {
      LaurentPoly h = kl_h(k, x, y);
      if (!h.is_zero()) d.decomp.emplace(std::pair{x, y}, std::move(h));
    }

  d.cell_chars = cell_characters(enumerate_leaves(t, word));
  return d;
}

LaurentPoly char_cell_via_hecke(const KLTable& k, const Word& word, Element x) {
  require_reduced(k.table(), word);
  return kl_word_product(k.table(), word).coefficient(x);
}

Report verify_decomposition_identity(const CellDatum& d) {
  Report out;
  for (Element x : d.lambda) {
    LaurentPoly rhs;
    for (const auto& [y, gdim] : d.simple_gdims) rhs += d.decomposition(x, y) * gdim;
    IdentityCheck c;
    c.identity = "cell_decomposition";
    c.word = d.word;
    c.x = x;
    c.lhs = d.cell_char(x);
    c.rhs = std::move(rhs);
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

Report verify_cell_invariants(const KLTable& k, const CellDatum& d) {
  const GroupTable& t = k.table();
  const HeckeElt bs = kl_word_product(t, d.word);
  Report out;
  for (Element x : d.lambda)
    out.push_back(compare("leaves_vs_hecke", d.word, x, d.cell_char(x), bs.coefficient(x)));
  for (const auto& [x, c] : d.cell_chars)
    if (!t.bruhat_leq(x, d.top)) out.push_back(compare("leaves_vs_hecke", d.word, x, c, {}));

  for (const auto& [y, g] : d.simple_gdims) {
    out.push_back(compare("simple_bar_symmetry", d.word, y, g, g.bar()));
    std::vector<LaurentPoly::Term> nonneg;
    for (const auto& term : g.terms())
      if (term.coeff > 0) nonneg.push_back(term);
    out.push_back(compare("simple_positivity", d.word, y, g, LaurentPoly::from_terms(nonneg)));
  }
  auto top = d.simple_gdims.find(d.top);
  out.push_back(compare("top_simple", d.word, d.top,
                        top == d.simple_gdims.end() ? LaurentPoly{} : top->second, LaurentPoly(1)));

  for (Element y : d.lambda0)
    for (Element x : d.lambda) {
      const bool below = t.bruhat_leq(x, y);
      if (x != y && below) continue;
      IdentityCheck c = compare("decomposition_triangularity", d.word, x, d.decomposition(x, y),
                                LaurentPoly(x == y ? 1 : 0));
      c.z = y;
      out.push_back(std::move(c));
    }

  Report identity = verify_decomposition_identity(d);
  out.insert(out.end(), std::make_move_iterator(identity.begin()),
             std::make_move_iterator(identity.end()));
  return out;
}

nlohmann::json to_json(const GroupTable& t, const CellDatum& d, const Report& checks) {
  nlohmann::json lambda0 = nlohmann::json::array();
  nlohmann::json gdims = nlohmann::json::array();
  for (const auto& [y, c] : d.simple_gdims) {
    lambda0.push_back(t.word(y));
    gdims.push_back({t.word(y), c});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (Element x : d.lambda) chars.push_back({t.word(x), d.cell_char(x)});
  return {{"word", d.word},
          {"lambda0", std::move(lambda0)},
          {"simple_gdims", std::move(gdims)},
          {"cell_chars", std::move(chars)},
          {"checks", to_json(t, checks)},
          {"pass", all_pass(checks)}};
}

}  // namespace klcat
