#pragma once

#include "klcat/coxeter.hpp"
#include "klcat/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klcat {

/// One checked polynomial identity; shared by every verification report.
struct IdentityCheck {
  std::string identity;
  Word word;
  Element x;
  std::optional<Element> u;
  std::optional<Element> z;
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool pass = false;
  /// Free-form qualifier, e.g. which case of a branching rule applied.
  std::string note;
};

using Report = std::vector<IdentityCheck>;

/// lhs == rhs check. Properties ("h has nonnegative coefficients") are
/// phrased the same way, with rhs the part of lhs the property allows.
IdentityCheck compare(std::string identity, Word word, Element x, LaurentPoly lhs,
                      LaurentPoly rhs);

bool all_pass(const Report& r);
std::size_t count_failures(const Report& r);
nlohmann::json to_json(const GroupTable& t, const IdentityCheck& c);
nlohmann::json to_json(const GroupTable& t, const Report& r);

}  // namespace klcat
