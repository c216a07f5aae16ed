#pragma once

#include "klcat/branch.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace klcat {

enum class Suite { kl, leaves, branch, recursion, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Every reduced word of every element in the table, ordered by element
/// (length, ShortLex) and then lexicographically. Starts with the empty word.
std::vector<Word> reduced_words(const KLTable& k);

struct SuiteReport {
  Suite suite;
  std::size_t total = 0;
  std::size_t failures = 0;
  Report checks;  // failing checks, plus passing ones when asked for
};

/// Runs one suite (or all four, in order). Per-word work is sharded over
/// `threads` workers; the result does not depend on the thread count.
std::vector<SuiteReport> run_suite(const KLTable& k, Suite suite, unsigned threads = 1,
                                   bool keep_passing = false);

}  // namespace klcat
