#pragma once

#include "klcat/cells.hpp"

#include <map>
#include <vector>

namespace klcat {

/// A class in the graded Grothendieck group of a reduced expression,
/// written in the basis of simple classes [L(y)], y ∈ Λ₀.
struct GrothendieckVector {
  std::vector<Element> basis_index;
  std::map<Element, LaurentPoly> coords;

  LaurentPoly coordinate(Element y) const;
  bool operator==(const GrothendieckVector&) const = default;
};

/// Restriction from the algebra of (s, s2, ..., sk) to that of (s2, ..., sk),
/// tabulated on simple classes.
struct ResData {
  Word word;
  Word tail;
  Generator s = 0;
  std::vector<Element> lambda0;       // of word
  std::vector<Element> tail_lambda0;  // of tail
  std::map<Element, GrothendieckVector> res_matrix;

  const GrothendieckVector& column(Element x) const;
};

ResData build_res(const KLTable& k, const Word& word);

/// Res[Δ(x)] = v^{∓1}[Δ'(x)] + [Δ'(sx)] written in the simple basis of the
/// tail: u ↦ v^{∓1} h_{x,u} + h_{sx,u}, with -1 when sx < x.
GrothendieckVector res_cell_class(const KLTable& k, const Word& word, Element x);

/// Σ_y d(x,y) Res[L(y)], i.e. restriction applied through the simple basis.
GrothendieckVector res_via_simples(const KLTable& k, const ResData& res, Element x);

/// Character-level short exact sequences and the leaf partition behind them.
Report verify_branching(const KLTable& k, const Word& word);

/// Σ_{x∈Λ₀} h^x_{s,u} h_{z,x} = v^{∓1} h_{z,u} + h_{sz,u} for z ≤ w, u ∈ Λ₀(tail).
Report verify_simple_restriction(const KLTable& k, const Word& word);

/// Expansion of H̱_s H̱_{w'}: coefficient 1 at w, μ(z,w') at z with sz < z < w',
/// and 0 everywhere else.
Report verify_generator_product(const KLTable& k, const Word& word);

/// Res commutes with the change from cell to simple classes.
Report verify_res_homomorphism(const KLTable& k, const Word& word);

enum class CorrectionIndex {
  /// z ∈ Λ₀(word), z ≠ w, weighted by the expansion coefficient h^z_{s,w'}.
  lambda0,
  /// z with sz < z < w', weighted by μ(z,w').
  descent_interval,
};

struct RecursionResult {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool pass = false;
};

/// h_{x,w} recovered from restriction: the [L(w')] coordinate of Res[Δ(x)]
/// minus the contributions of the other simple classes.
RecursionResult derive_recursion(const KLTable& k, const Word& word, Element x,
                                 CorrectionIndex index = CorrectionIndex::lambda0);

/// derive_recursion for every x ≤ w, with both correction index sets.
Report verify_recursion(const KLTable& k, const Word& word);

}  // namespace klcat
