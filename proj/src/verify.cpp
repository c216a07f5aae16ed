#include "klcat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iterator>
#include <thread>

namespace klcat {

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kl, Suite::leaves, Suite::branch, Suite::recursion, Suite::all})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kl: return "kl";
    case Suite::leaves: return "leaves";
    case Suite::branch: return "branch";
    case Suite::recursion: return "recursion";
    case Suite::all: return "all";
  }
  return "?";
}

std::vector<Word> reduced_words(const KLTable& k) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    auto words = k.table().all_reduced_words(k.table().element(i));
    std::sort(words.begin(), words.end());
    out.insert(out.end(), std::make_move_iterator(words.begin()),
               std::make_move_iterator(words.end()));
  }
  return out;
}

namespace {

void append(Report& into, Report&& from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()),
              std::make_move_iterator(from.end()));
}

// Counts everything, keeps failures (and passing checks only on request) so a
// large group does not hold every polynomial pair in memory.
struct Tally {
  std::size_t total = 0;
  std::size_t failures = 0;
  Report kept;

  void absorb(Report&& r, bool keep_passing) {
    total += r.size();
    for (auto& c : r) {
      failures += !c.pass;
      if (keep_passing || !c.pass) kept.push_back(std::move(c));
    }
  }
  void absorb(Tally&& other) {
    total += other.total;
    failures += other.failures;
    append(kept, std::move(other.kept));
  }
};

Tally per_word(const std::vector<Word>& words, unsigned threads, bool keep_passing,
               const std::function<Report(const Word&)>& check) {
  std::vector<Tally> slots(words.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(words.size())));
  auto run = [&](std::size_t i) { slots[i].absorb(check(words[i]), keep_passing); };
  if (workers == 1) {
    for (std::size_t i = 0; i < words.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i = cursor++; i < words.size(); i = cursor++) run(i);
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  Tally out;
  for (auto& t : slots) out.absorb(std::move(t));
  return out;
}

Tally run_one(const KLTable& k, Suite suite, unsigned threads, bool keep_passing) {
  std::vector<Word> words = reduced_words(k);
  std::vector<Word> nonempty(words.begin() + 1, words.end());
  switch (suite) {
    case Suite::kl: {
      Tally out;
      out.absorb(verify_kl_structure(k), keep_passing);
      out.absorb(verify_kl_recursions(k), keep_passing);
      out.absorb(verify_kl_choices(k, threads), keep_passing);
      return out;
    }
    case Suite::leaves:
      return per_word(words, threads, keep_passing, [&](const Word& w) {
        return verify_cell_invariants(k, build_cell_datum(k, w));
      });
    case Suite::branch:
      return per_word(nonempty, threads, keep_passing, [&](const Word& w) {
        Report out = verify_branching(k, w);
        append(out, verify_simple_restriction(k, w));
        append(out, verify_generator_product(k, w));
        append(out, verify_res_homomorphism(k, w));
        return out;
      });
    case Suite::recursion:
      return per_word(nonempty, threads, keep_passing,
                      [&](const Word& w) { return verify_recursion(k, w); });
    case Suite::all: break;
  }
  return {};
}

}  // namespace

std::vector<SuiteReport> run_suite(const KLTable& k, Suite suite, unsigned threads,
                                   bool keep_passing) {
  std::vector<SuiteReport> out;
  for (Suite s : {Suite::kl, Suite::leaves, Suite::branch, Suite::recursion}) {
    if (suite != Suite::all && suite != s) continue;
    Tally t = run_one(k, s, threads, keep_passing);
    out.push_back({s, t.total, t.failures, std::move(t.kept)});
  }
  return out;
}

}  // namespace klcat
