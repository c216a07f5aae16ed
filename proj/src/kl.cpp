#include "klcat/kl.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace klcat {

const HeckeElt& KLTable::basis(Element w) const {
  if (!has(w))
    throw std::out_of_range("KL basis element beyond length bound " +
                            std::to_string(up_to_length_));
  return basis_[w.id];
}

namespace {

HeckeElt next_basis_element(const GroupTable& t, const std::vector<HeckeElt>& basis, Element w,
                            DescentChoice choice) {
  const auto desc = t.descents(w, Side::left);
  const Generator s = choice == DescentChoice::smallest ? desc.front() : desc.back();
  const Element u = t.mult(w, s, Side::left);
  const HeckeElt prod = mul_KLs(s, basis[u.id]);
  HeckeElt result = prod;
  for (const auto& [z, g] : prod.support()) {
    if (z == w) continue;
    if (!g.is_zero() && g.min_exponent() < 0)
      throw std::logic_error("negative exponent in H̱_s H̱_u; lower basis elements are corrupt");
    const BigInt g0 = g.coefficient(0);
    if (g0 == 0) continue;
    HeckeElt correction = basis[z.id];
    correction *= LaurentPoly::monomial(g0, 0);
    result -= correction;
  }
  return result;
}

}  // namespace

KLTable compute_kl(const GroupTable& t, int up_to_length, const KLOptions& options) {
  const int bound = up_to_length < 0 ? t.complete_length() : up_to_length;
  if (bound > t.complete_length())
    throw PartialTableError("KL bound " + std::to_string(bound) +
                            " exceeds the complete length of the table (" +
                            std::to_string(t.complete_length()) + ")");
  KLTable k(t, bound);
  std::size_t count = 0;
  for (int len = 0; len <= bound; ++len) count += t.count_of_length(len);
  k.basis_.assign(count, HeckeElt(t));
  k.basis_[0] = HeckeElt::std_basis(t, t.identity());

  for (int len = 1; len <= bound; ++len) {
    const auto stratum = t.elements_of_length(len);
    const unsigned workers =
        std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(stratum.size())));
    if (workers == 1) {
      for (Element w : stratum) k.basis_[w.id] = next_basis_element(t, k.basis_, w, options.descent);
      continue;
    }
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i = cursor++; i < stratum.size(); i = cursor++) {
        const Element w = stratum[i];
        k.basis_[w.id] = next_basis_element(t, k.basis_, w, options.descent);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return k;
}

LaurentPoly kl_h(const KLTable& k, Element x, Element w) {
  return k.basis(w).coefficient(x);
}

BigInt mu(const KLTable& k, Element z, Element w) { return kl_h(k, z, w).coefficient(1); }

QPoly to_P(const LaurentPoly& h, int lx, int lw) {
  const int d = lw - lx;
  std::vector<LaurentPoly::Term> terms;
  for (const auto& term : h.terms()) {
    if (term.exponent > d || (d - term.exponent) % 2 != 0)
      throw std::domain_error("h = " + h.to_string() + " is not of the form v^" +
                              std::to_string(d) + " P(v^-2)");
    terms.push_back({(d - term.exponent) / 2, term.coeff});
  }
  return QPoly{LaurentPoly::from_terms(std::move(terms))};
}

namespace {

void require_left_descent(const GroupTable& t, Element w, Generator s) {
  if (s < 0 || s >= t.rank() || !t.is_descent(w, s, Side::left))
    throw std::invalid_argument("s" + std::to_string(s + 1) + " is not a left descent of w");
}

// Only elements strictly shorter than the target are consulted.
LaurentPoly lower_h(const KLTable& k, std::optional<Element> x, Element z) {
  if (!x) return {};
  return kl_h(k, *x, z);
}

}  // namespace

LaurentPoly recursion_h(const KLTable& k, Element x, Element w, Generator s) {
  const GroupTable& t = k.table();
  require_left_descent(t, w, s);
  const Element sw = t.mult(w, s, Side::left);
  const std::optional<Element> sx = t.try_mult(x, s, Side::left);
  const bool up = !sx || t.length(*sx) > t.length(x);

  LaurentPoly result = lower_h(k, x, sw).shift(up ? 1 : -1);
  result += lower_h(k, sx, sw);
  for (Element z : t.bruhat_interval(sw)) {
    if (z == sw || !t.is_descent(z, s, Side::left)) continue;
    const BigInt m = kl_h(k, z, sw).coefficient(1);
    if (m == 0) continue;
    result -= LaurentPoly::monomial(m, 0) * kl_h(k, x, z);
  }
  return result;
}

QPoly p_recursion(const KLTable& k, Element x, Element w, Generator s) {
  const GroupTable& t = k.table();
  require_left_descent(t, w, s);
  if (x == w) return QPoly{LaurentPoly(1)};
  if (!t.bruhat_leq(x, w)) return QPoly{};

  const Element sw = t.mult(w, s, Side::left);
  const Element sx = t.mult(x, s, Side::left);  // l(sx) <= l(w), so it is enumerated
  const int c = t.length(sx) < t.length(x) ? 1 : 0;
  auto P = [&](Element a, Element b) {
    return to_P(kl_h(k, a, b), t.length(a), t.length(b)).coeffs;
  };

  LaurentPoly result = P(sx, sw).shift(1 - c) + P(x, sw).shift(c);
  for (Element z : t.bruhat_interval(sw)) {
    if (z == sw || !t.is_descent(z, s, Side::left)) continue;
    const int gap = t.length(sw) - t.length(z);
    if (gap % 2 == 0) continue;
    const BigInt m = P(z, sw).coefficient((gap - 1) / 2);
    if (m == 0) continue;
    const int qexp = (t.length(w) - t.length(z)) / 2;
    result -= LaurentPoly::monomial(m, qexp) * P(x, z);
  }
  return QPoly{std::move(result)};
}

std::map<Element, LaurentPoly> expand_in_kl_basis(const KLTable& k, const HeckeElt& h) {
  std::map<Element, LaurentPoly> out;
  HeckeElt rest = h;
  while (!rest.is_zero()) {
    const auto& [top, a] = *rest.support().rbegin();
    const Element y = top;
    const LaurentPoly coeff = a;
    out.emplace(y, coeff);
    HeckeElt term = k.basis(y);
    term *= coeff;
    rest -= term;
  }
  return out;
}

std::map<Element, LaurentPoly> structure_constants(const KLTable& k, Generator s, Element u) {
  return expand_in_kl_basis(k, mul_KLs(s, k.basis(u)));
}

nlohmann::json to_json(const KLTable& k) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Element w = k.table().element(i);
    nlohmann::json row = to_json(k.basis(w));
    row["w"] = k.table().word(w);
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  to_json(j["matrix"], k.table().matrix());
  j["up_to_length"] = k.up_to_length();
  j["basis"] = std::move(rows);
  return j;
}

KLTable kl_table_from_json(const GroupTable& t, const nlohmann::json& j) {
  if (coxeter_matrix_from_json(j.at("matrix")) != t.matrix())
    throw std::invalid_argument("KL table was computed for a different Coxeter matrix");
  const int bound = j.at("up_to_length").get<int>();
  if (bound > t.complete_length()) throw PartialTableError("KL table bound exceeds group table");
  KLTable k(t, bound);
  std::size_t count = 0;
  for (int len = 0; len <= bound; ++len) count += t.count_of_length(len);
  k.basis_.assign(count, HeckeElt(t));
  const auto& rows = j.at("basis");
  if (rows.size() != count) throw std::invalid_argument("KL table has wrong number of rows");
  for (const auto& row : rows) {
    const Element w = t.evaluate(row.at("w").get<Word>());
    if (w.id >= count) throw std::invalid_argument("KL table row beyond its bound");
    k.basis_[w.id] = hecke_from_json(t, row);
  }
  return k;
}

}  // namespace klcat

namespace klcat {

namespace {

LaurentPoly keep_terms(const LaurentPoly& h, auto&& allowed) {
  std::vector<LaurentPoly::Term> kept;
  for (const auto& term : h.terms())
    if (allowed(term)) kept.push_back(term);
  return LaurentPoly::from_terms(std::move(kept));
}

LaurentPoly nonnegative_part(const LaurentPoly& h) {
  return keep_terms(h, [](const LaurentPoly::Term& t) { return t.coeff > 0; });
}

}  // namespace

Report verify_kl_structure(const KLTable& k) {
  const GroupTable& t = k.table();
  Report out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Element w = t.element(i);
    const HeckeElt& b = k.basis(w);
    const Word& ww = t.word(w);
    const HeckeElt barred = bar(b);
    for (const auto& [x, c] : barred.support())
      if (!b.support().contains(x)) out.push_back(compare("bar_invariance", ww, x, c, {}));
    for (const auto& [x, h] : b.support()) {
      out.push_back(compare("bar_invariance", ww, x, barred.coefficient(x), h));
      if (!t.bruhat_leq(x, w)) {
        out.push_back(compare("triangularity", ww, x, h, {}));
        continue;
      }
      const int d = t.length(w) - t.length(x);
      if (x == w) {
        out.push_back(compare("normalization", ww, x, h, LaurentPoly(1)));
        continue;
      }
      out.push_back(compare("positive_degree", ww, x, h,
                            keep_terms(h, [](const auto& term) { return term.exponent > 0; })));
      out.push_back(compare("parity", ww, x, h, keep_terms(h, [d](const auto& term) {
                              return (d - term.exponent) % 2 == 0 && term.exponent <= d;
                            })));
      out.push_back(compare("positivity", ww, x, h, nonnegative_part(h)));
    }
    if (!b.support().contains(w)) out.push_back(compare("normalization", ww, w, {}, LaurentPoly(1)));

    for (Generator s = 0; s < t.rank(); ++s) {
      // H̱_s H̱_w stays inside the table only below the bound.
      if (t.length(w) >= k.up_to_length() && !t.is_descent(w, s, Side::left)) continue;
      Word label{s};
      label.insert(label.end(), ww.begin(), ww.end());
      for (const auto& [x, c] : structure_constants(k, s, w)) {
        IdentityCheck pos = compare("structure_positivity", label, x, c, nonnegative_part(c));
        pos.u = w;
        out.push_back(std::move(pos));
        IdentityCheck sym = compare("structure_bar_symmetry", label, x, c, c.bar());
        sym.u = w;
        out.push_back(std::move(sym));
      }
    }
  }
  return out;
}

Report verify_kl_recursions(const KLTable& k) {
  const GroupTable& t = k.table();
  Report out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Element w = t.element(i);
    const Word& ww = t.word(w);
    for (std::size_t j = 0; j < k.size(); ++j) {
      const Element x = t.element(j);
      const LaurentPoly h = kl_h(k, x, w);
      if (w == t.identity()) {
        out.push_back(compare("recursion_h", ww, x, h, LaurentPoly(x == w ? 1 : 0)));
        continue;
      }
      for (Generator s : t.descents(w, Side::left)) {
        IdentityCheck c = compare("recursion_h", ww, x, h, recursion_h(k, x, w, s));
        c.note = "s" + std::to_string(s + 1);
        out.push_back(std::move(c));
        if (!t.bruhat_leq(x, w)) continue;
        const int lx = t.length(x), lw = t.length(w);
        IdentityCheck p =
            compare("p_recursion", ww, x, to_P(h, lx, lw).coeffs, p_recursion(k, x, w, s).coeffs);
        p.note = c.note;
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

Report verify_kl_choices(const KLTable& k, unsigned threads) {
  const GroupTable& t = k.table();
  const KLTable largest = compute_kl(t, k.up_to_length(), {DescentChoice::largest, 1});
  const KLTable parallel =
      compute_kl(t, k.up_to_length(), {DescentChoice::smallest, std::max(2U, threads)});
  Report out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Element w = t.element(i);
    for (const auto& [x, h] : k.basis(w).support()) {
      out.push_back(compare("descent_choice", t.word(w), x, kl_h(largest, x, w), h));
      out.push_back(compare("thread_determinism", t.word(w), x, kl_h(parallel, x, w), h));
    }
    if (!(largest.basis(w) == k.basis(w)))
      out.push_back(compare("descent_choice", t.word(w), w, {}, LaurentPoly(1)));
    if (!(parallel.basis(w) == k.basis(w)))
      out.push_back(compare("thread_determinism", t.word(w), w, {}, LaurentPoly(1)));
  }
  return out;
}

}  // namespace klcat
