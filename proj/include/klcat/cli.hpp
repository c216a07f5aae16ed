#pragma once

#include "klcat/kl.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klcat::cli {

enum ExitCode : int {
  kPass = 0,
  kIdentityFailure = 1,
  kSpecError = 2,
  kCacheError = 3,
  kInputError = 4,
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "A3", "B3", "I2(5)", "I2(inf)", ... Throws SpecError.
CoxeterMatrix preset(std::string_view name);
/// Exactly one of `type` / `matrix_json` must be non-empty.
CoxeterMatrix parse_matrix_spec(const std::string& type, const std::string& matrix_json);

/// "s2,s1,s3,s2", "s2s1s3s2", "s,t,u", "st" or "e". Throws InputError.
Word parse_word(std::string_view text, int rank);
/// s2s1s3s2; the empty word is "e".
std::string format_word(const Word& w);

/// FNV-1a over the compact JSON form of the matrix.
std::uint64_t matrix_hash(const CoxeterMatrix& m);

/// Serialized cache document: {"header": {...}, "body": <KL table>} plus newline.
std::string cache_document(const KLTable& k);
/// Parses a cache document and checks it against the expected matrix, bound
/// and tool version. Throws CacheError on any mismatch or parse failure.
KLTable load_cache(const GroupTable& t, int bound, const std::string& text);

/// Runs one command line (without the program name); returns the exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace klcat::cli
