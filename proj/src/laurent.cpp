#include "klcat/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klcat {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [e, c] : terms) raw.push_back({e, BigInt(c)});
  *this = from_terms(std::move(raw));
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exponent) {
  if (coeff == 0) return {};
  return LaurentPoly(std::vector<Term>{{exponent, std::move(coeff)}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return LaurentPoly(std::move(out));
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().exponent;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().exponent;
}

BigInt LaurentPoly::coefficient(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == k) return it->coeff;
  return 0;
}

bool LaurentPoly::in_positive_part() const {
  return is_zero() || terms_.front().exponent >= 1;
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

bool LaurentPoly::is_bar_symmetric() const { return bar() == *this; }

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.exponent = -t.exponent;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shift(int k) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponent += k;
  return LaurentPoly(std::move(out));
}

// Merge of two sorted term lists.
void LaurentPoly::combine(const LaurentPoly& rhs, int sign) {
  if (rhs.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exponent < b->exponent)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      out.push_back({b->exponent, sign > 0 ? b->coeff : BigInt(-b->coeff)});
      ++b;
    } else {
      BigInt c = a->coeff;
      if (sign > 0) c += b->coeff; else c -= b->coeff;
      if (c != 0) out.push_back({a->exponent, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  combine(rhs, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  combine(rhs, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<int, BigInt> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.exponent + y.exponent] += x.coeff * y.coeff;
  std::vector<LaurentPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, std::move(c)});
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (t.coeff < 0) {
      os << '-' << BigInt(-t.coeff);
    } else {
      if (!first) os << '+';
      os << t.coeff;
    }
    os << '*' << var << '^' << t.exponent;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

void to_json(nlohmann::json& j, const LaurentPoly& p) {
  j = nlohmann::json::object();
  for (const auto& t : p.terms()) {
    const auto key = std::to_string(t.exponent);
    if (t.coeff >= std::numeric_limits<long long>::min() &&
        t.coeff <= std::numeric_limits<long long>::max()) {
      j[key] = static_cast<long long>(t.coeff);
    } else {
      j[key] = t.coeff.str();
    }
  }
}

void from_json(const nlohmann::json& j, LaurentPoly& p) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    const int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key: " + key);
    BigInt c;
    if (val.is_number_integer()) {
      c = BigInt(val.get<long long>());
    } else if (val.is_string()) {
      c = BigInt(val.get<std::string>());
    } else {
      throw std::invalid_argument("bad coefficient for exponent " + key);
    }
    terms.push_back({e, std::move(c)});
  }
  p = LaurentPoly::from_terms(std::move(terms));
}

}  // namespace klcat
