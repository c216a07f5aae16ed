#include "klcat/report.hpp"

#include <algorithm>

namespace klcat {

IdentityCheck compare(std::string identity, Word word, Element x, LaurentPoly lhs,
                      LaurentPoly rhs) {
  IdentityCheck c;
  c.identity = std::move(identity);
  c.word = std::move(word);
  c.x = x;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.pass = c.lhs == c.rhs;
  return c;
}

std::size_t count_failures(const Report& r) {
  return std::count_if(r.begin(), r.end(), [](const IdentityCheck& c) { return !c.pass; });
}

bool all_pass(const Report& r) {
  return std::all_of(r.begin(), r.end(), [](const IdentityCheck& c) { return c.pass; });
}

nlohmann::json to_json(const GroupTable& t, const IdentityCheck& c) {
  nlohmann::json j{{"identity", c.identity}, {"word", c.word}, {"x", t.word(c.x)}};
  if (c.u) j["u"] = t.word(*c.u);
  if (c.z) j["z"] = t.word(*c.z);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["pass"] = c.pass;
  if (!c.note.empty()) j["case"] = c.note;
  return j;
}

nlohmann::json to_json(const GroupTable& t, const Report& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r) out.push_back(to_json(t, c));
  return out;
}

}  // namespace klcat
