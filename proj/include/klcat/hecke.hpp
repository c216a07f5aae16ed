#pragma once

#include "klcat/coxeter.hpp"
#include "klcat/laurent.hpp"

#include <map>

namespace klcat {

/// Element of the Hecke algebra in standard-basis coordinates, sum a_w H_w.
/// Never stores a zero coefficient. Iteration is in (length, ShortLex) order.
class HeckeElt {
 public:
  using Support = std::map<Element, LaurentPoly>;

  explicit HeckeElt(const GroupTable& table) : table_(&table) {}

  static HeckeElt std_basis(const GroupTable& table, Element w);
  /// H_s + v, the KL basis element of a simple reflection.
  static HeckeElt kl_generator(const GroupTable& table, Generator s);

  const GroupTable& table() const { return *table_; }
  const Support& support() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  LaurentPoly coefficient(Element w) const;

  void add_term(Element w, const LaurentPoly& c);
  HeckeElt& operator+=(const HeckeElt& rhs);
  HeckeElt& operator-=(const HeckeElt& rhs);
  HeckeElt& operator*=(const LaurentPoly& scalar);

  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, HeckeElt h) { return h *= c; }

  bool operator==(const HeckeElt& rhs) const {
    return table_ == rhs.table_ && coeffs_ == rhs.coeffs_;
  }

 private:
  const GroupTable* table_;
  Support coeffs_;
};

/// H_s * h.
HeckeElt mul_Hs(Generator s, const HeckeElt& h);
/// (H_s + v) * h.
HeckeElt mul_KLs(Generator s, const HeckeElt& h);
HeckeElt product(const HeckeElt& a, const HeckeElt& b);
/// The involution v -> v^-1, H_w -> (H_{w^-1})^-1.
HeckeElt bar(const HeckeElt& h);

/// (H_{s1} + v) ... (H_{sk} + v), i.e. the class of a Bott-Samelson object.
HeckeElt kl_word_product(const GroupTable& table, const Word& word);

// {"coeffs": [[word, poly], ...]} in (length, ShortLex) order.
nlohmann::json to_json(const HeckeElt& h);
HeckeElt hecke_from_json(const GroupTable& table, const nlohmann::json& j);

}  // namespace klcat
