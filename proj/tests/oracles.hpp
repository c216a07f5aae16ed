#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the Hecke/KL/leaves code: polynomials are std::map<int, long long>
// and the Hecke algebra is rebuilt from the quadratic relation.

#include "klcat/coxeter.hpp"
#include "klcat/laurent.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using klcat::Element;
using klcat::GroupTable;
using klcat::Word;

// ---- permutations: A_{n-1} with s_i = (i, i+1) ------------------------------

using Perm = std::vector<int>;  // one-line notation, values 0..n-1

Perm identity_perm(int n);
Perm perm_of_word(const Word& w, int n);  // s_{i1} s_{i2} ... acting on positions
int inversions(const Perm& p);
/// Tableau criterion.
bool perm_bruhat_leq(const Perm& x, const Perm& w);
std::vector<Perm> all_perms(int n);

// ---- words ------------------------------------------------------------------

/// All words reachable from `w` by braid moves (Matsumoto/Tits closure).
std::set<Word> braid_closure(const klcat::CoxeterMatrix& m, const Word& w);
/// x ≤ w iff some subword of the given reduced word of w evaluates to x.
bool subword_leq(const GroupTable& t, Element x, const Word& reduced_w);
/// Number of subwords (as position subsets) of `word` that evaluate to x.
long long subword_count(const GroupTable& t, const Word& word, Element x);

// ---- Hecke algebra over map<int, long long> --------------------------------

using Poly = std::map<int, long long>;
using Vec = std::map<std::uint32_t, Poly>;  // element id -> coefficient

void add_to(Poly& a, const Poly& b, long long scale = 1);
Poly mul(const Poly& a, const Poly& b);
Poly bar(const Poly& a);
klcat::LaurentPoly to_laurent(const Poly& a);

Vec left_mul_Hs(const GroupTable& t, int s, const Vec& h);
/// bar(H_y) for the element y.
Vec bar_std(const GroupTable& t, Element y);
/// Π_i (H_{s_i} + v) in the standard basis.
Vec bs_product(const GroupTable& t, const Word& word);

/// H̱_w solved directly from bar invariance and h_{x,w} ∈ vZ[v] (x < w),
/// working down the interval. Returns x -> h_{x,w}.
std::map<std::uint32_t, klcat::LaurentPoly> kl_by_bar_invariance(const GroupTable& t, Element w);

// ---- random inputs ----------------------------------------------------------

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }
};

/// Sparse polynomial; occasionally with coefficients far beyond 64 bits.
klcat::LaurentPoly random_poly(Rng& rng, int max_terms = 5, int span = 6);
Word random_word(Rng& rng, int rank, int max_len);

}  // namespace oracle
