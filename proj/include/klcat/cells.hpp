#pragma once

#include "klcat/kl.hpp"
#include "klcat/leaves.hpp"
#include "klcat/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klcat {

class NotReducedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_reduced(const GroupTable& t, const Word& word);

/// Graded cell data of the endomorphism algebra of a reduced expression.
struct CellDatum {
  Word word;
  Element top;                                   // the element w the word represents
  std::vector<Element> lambda;                   // {x <= w}
  std::vector<Element> lambda0;                  // support of the simple classes
  std::map<Element, LaurentPoly> cell_chars;     // x -> graded dimension of Δ(x)
  std::map<Element, LaurentPoly> simple_gdims;   // y -> graded dimension of L(y)
  std::map<std::pair<Element, Element>, LaurentPoly> decomp;  // (x, y) -> d_{x,y}

  LaurentPoly decomposition(Element x, Element y) const;
  LaurentPoly cell_char(Element x) const;
  bool in_lambda0(Element y) const;
};

/// KL support of the Bott–Samelson class of a reduced expression, ascending.
std::vector<Element> compute_lambda0(const KLTable& k, const Word& word);

CellDatum build_cell_datum(const KLTable& k, const Word& word);
/// H_x coefficient of (H_{s1}+v)...(H_{sk}+v).
LaurentPoly char_cell_via_hecke(const KLTable& k, const Word& word, Element x);
/// cell_chars(x) == sum_y decomp(x,y) simple_gdims(y) for every x in Λ.
Report verify_decomposition_identity(const CellDatum& d);

/// Leaves against Hecke characters on all of Λ, bar symmetry and positivity of
/// gdim L, gdim L(w) = 1, unitriangular decomposition numbers, and the
/// decomposition identity.
Report verify_cell_invariants(const KLTable& k, const CellDatum& d);

nlohmann::json to_json(const GroupTable& t, const CellDatum& d, const Report& checks);

}  // namespace klcat
