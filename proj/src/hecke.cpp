#include "klcat/hecke.hpp"

#include <ranges>

namespace klcat {

HeckeElt HeckeElt::std_basis(const GroupTable& table, Element w) {
  HeckeElt h(table);
  h.coeffs_.emplace(w, LaurentPoly(1));
  return h;
}

HeckeElt HeckeElt::kl_generator(const GroupTable& table, Generator s) {
  return mul_KLs(s, std_basis(table, table.identity()));
}

LaurentPoly HeckeElt::coefficient(Element w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add_term(Element w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& rhs) {
  for (const auto& [w, c] : rhs.coeffs_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& rhs) {
  for (const auto& [w, c] : rhs.coeffs_) add_term(w, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [w, c] : coeffs_) c *= scalar;
  return *this;
}

HeckeElt mul_Hs(Generator s, const HeckeElt& h) {
  const GroupTable& t = h.table();
  HeckeElt out(t);
  static const LaurentPoly quad{{-1, 1}, {1, -1}};  // v^-1 - v
  for (const auto& [x, c] : h.support()) {
    const Element sx = t.mult(x, s, Side::left);
    out.add_term(sx, c);
    if (t.length(sx) < t.length(x)) out.add_term(x, quad * c);
  }
  return out;
}

HeckeElt mul_KLs(Generator s, const HeckeElt& h) {
  const GroupTable& t = h.table();
  HeckeElt out(t);
  for (const auto& [x, c] : h.support()) {
    const Element sx = t.mult(x, s, Side::left);
    out.add_term(sx, c);
    out.add_term(x, c.shift(t.length(sx) > t.length(x) ? 1 : -1));
  }
  return out;
}

HeckeElt product(const HeckeElt& a, const HeckeElt& b) {
  const GroupTable& t = a.table();
  HeckeElt out(t);
  for (const auto& [x, c] : a.support()) {
    HeckeElt term = b;
    for (Generator s : t.word(x) | std::views::reverse) term = mul_Hs(s, term);
    term *= c;
    out += term;
  }
  return out;
}

HeckeElt bar(const HeckeElt& h) {
  const GroupTable& t = h.table();
  static const LaurentPoly inv_shift{{-1, -1}, {1, 1}};  // v - v^-1
  HeckeElt out(t);
  for (const auto& [w, c] : h.support()) {
    HeckeElt term = HeckeElt::std_basis(t, t.identity());
    for (Generator s : t.word(w) | std::views::reverse) {
      HeckeElt next = mul_Hs(s, term);
      next += inv_shift * term;
      term = std::move(next);
    }
    term *= c.bar();
    out += term;
  }
  return out;
}

HeckeElt kl_word_product(const GroupTable& table, const Word& word) {
  check_word(table.matrix(), word);
  HeckeElt h = HeckeElt::std_basis(table, table.identity());
  for (Generator s : word | std::views::reverse) h = mul_KLs(s, h);
  return h;
}

nlohmann::json to_json(const HeckeElt& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [w, c] : h.support()) rows.push_back({h.table().word(w), c});
  return {{"coeffs", std::move(rows)}};
}

HeckeElt hecke_from_json(const GroupTable& table, const nlohmann::json& j) {
  HeckeElt h(table);
  for (const auto& row : j.at("coeffs")) {
    const Word w = row.at(0).get<Word>();
    h.add_term(table.evaluate(w), row.at(1).get<LaurentPoly>());
  }
  return h;
}

}  // namespace klcat
