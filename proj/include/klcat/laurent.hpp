#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klcat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in one variable with integer coefficients.
///
/// Terms are kept sorted by exponent with zero coefficients pruned, so two
/// polynomials are equal iff their term vectors are equal.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    BigInt coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit on purpose, 1 and 0 read naturally
  LaurentPoly(std::initializer_list<std::pair<int, long long>> terms);

  static LaurentPoly monomial(BigInt coeff, int exponent);
  /// The variable v.
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int min_exponent() const;
  int max_exponent() const;

  BigInt coefficient(int k) const;
  bool in_positive_part() const;
  bool nonnegative() const;
  bool is_bar_symmetric() const;

  LaurentPoly bar() const;
  LaurentPoly shift(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  /// `c1*x^e1+c2*x^e2...` in increasing exponent order; "0" for zero.
  std::string to_string(std::string_view var = "v") const;

 private:
  explicit LaurentPoly(std::vector<Term> sorted_nonzero) : terms_(std::move(sorted_nonzero)) {}
  void combine(const LaurentPoly& rhs, int sign);

  std::vector<Term> terms_;
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }
inline LaurentPoly shift(const LaurentPoly& a, int k) { return a.shift(k); }
inline BigInt coefficient(const LaurentPoly& a, int k) { return a.coefficient(k); }
inline bool in_positive_part(const LaurentPoly& a) { return a.in_positive_part(); }

/// A polynomial in q = v^-2 (classical KL normalization). Same storage as
/// LaurentPoly; kept as a distinct type so h- and P-values cannot be mixed.
struct QPoly {
  LaurentPoly coeffs;

  BigInt coefficient(int k) const { return coeffs.coefficient(k); }
  std::string to_string() const { return coeffs.to_string("q"); }
  bool operator==(const QPoly&) const = default;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

// JSON: {"<exponent>": coeff, ...}; coefficients outside int64 are written as
// decimal strings.
void to_json(nlohmann::json& j, const LaurentPoly& p);
void from_json(const nlohmann::json& j, LaurentPoly& p);

}  // namespace klcat
