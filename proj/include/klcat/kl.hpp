#pragma once

#include "klcat/hecke.hpp"
#include "klcat/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace klcat {

enum class DescentChoice { smallest, largest };

struct KLOptions {
  DescentChoice descent = DescentChoice::smallest;
  /// Worker threads per length stratum; 1 runs inline.
  unsigned threads = 1;
};

/// Kazhdan-Lusztig basis elements H̱_w in standard coordinates for every w of
/// length <= up_to_length().
class KLTable {
 public:
  const GroupTable& table() const { return *table_; }
  int up_to_length() const { return up_to_length_; }
  bool has(Element w) const { return w.id < basis_.size(); }
  /// Standard-basis expansion of H̱_w; throws if w is beyond the bound.
  const HeckeElt& basis(Element w) const;
  std::size_t size() const { return basis_.size(); }

  bool operator==(const KLTable& rhs) const {
    return table_ == rhs.table_ && up_to_length_ == rhs.up_to_length_ && basis_ == rhs.basis_;
  }

 private:
  friend KLTable compute_kl(const GroupTable&, int, const KLOptions&);
  friend KLTable kl_table_from_json(const GroupTable&, const nlohmann::json&);
  KLTable(const GroupTable& t, int bound) : table_(&t), up_to_length_(bound) {}

  const GroupTable* table_;
  int up_to_length_;
  std::vector<HeckeElt> basis_;  // indexed by element id
};

/// Builds H̱_w = H̱_s H̱_{sw} - sum g_z(0) H̱_z stratum by stratum. A negative
/// bound means "every complete length of the table".
KLTable compute_kl(const GroupTable& t, int up_to_length = -1, const KLOptions& options = {});

/// h_{x,w}: 1 when x = w, 0 when x is not below w.
LaurentPoly kl_h(const KLTable& k, Element x, Element w);
/// Coefficient of v in h_{z,w}.
BigInt mu(const KLTable& k, Element z, Element w);

/// P_{x,w}(q) from h_{x,w}(v) = v^{lw-lx} P_{x,w}(v^-2). Throws
/// std::domain_error if the exponents of h violate parity or degree bounds.
QPoly to_P(const LaurentPoly& h, int lx, int lw);

/// v^{±1} h_{x,sw} + h_{sx,sw} - sum_{sz<z<sw} mu(z,sw) h_{x,z}, evaluated
/// from strictly shorter basis elements only. s must be a left descent of w.
LaurentPoly recursion_h(const KLTable& k, Element x, Element w, Generator s);

/// Classical q-form: q^{1-c} P_{sx,sw} + q^c P_{x,sw}
///   - sum_{sz<z<sw} mu(z,sw) q^{(l(w)-l(z))/2} P_{x,z},  c = [sx < x].
QPoly p_recursion(const KLTable& k, Element x, Element w, Generator s);

/// Coefficients a_y with h = sum a_y H̱_y.
std::map<Element, LaurentPoly> expand_in_kl_basis(const KLTable& k, const HeckeElt& h);
/// KL coordinates h_{s,u}^x of H̱_s H̱_u.
std::map<Element, LaurentPoly> structure_constants(const KLTable& k, Generator s, Element u);

/// Bar invariance, normalization, h ∈ vZ[v] below the diagonal, exponent
/// parity, the degree bound, positivity, support inside [e,w], and positivity
/// and bar symmetry of every structure constant h^x_{s,u}.
Report verify_kl_structure(const KLTable& k);

/// For every w, every left descent s of w and every x in the table:
/// recursion_h agrees with the table (x ≰ w included, where both vanish), and
/// p_recursion agrees with to_P for x ≤ w. w = e is checked against h_{x,e} = δ.
Report verify_kl_recursions(const KLTable& k);

/// Tables built with the other descent choice and with several workers agree.
Report verify_kl_choices(const KLTable& k, unsigned threads);

nlohmann::json to_json(const KLTable& k);
KLTable kl_table_from_json(const GroupTable& t, const nlohmann::json& j);

}  // namespace klcat
