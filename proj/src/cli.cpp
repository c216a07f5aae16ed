#include "klcat/cli.hpp"

#include "klcat/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace klcat::cli {

namespace {

constexpr std::string_view kToolVersion = KLCAT_VERSION;

std::vector<std::vector<int>> unit_matrix(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

int parse_positive(std::string_view digits, std::string_view name) {
  int value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size() || value <= 0)
    throw SpecError("unknown group type '" + std::string(name) + "'");
  return value;
}

}  // namespace

CoxeterMatrix preset(std::string_view name) {
  if (name.starts_with("I2(") && name.ends_with(")")) {
    const std::string_view arg = name.substr(3, name.size() - 4);
    const int order = arg == "inf" ? CoxeterMatrix::kInfinity : parse_positive(arg, name);
    if (order == 1) throw SpecError("I2(m) needs m >= 2");
    return CoxeterMatrix(2, {{1, order}, {order, 1}});
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B')) {
    const int n = parse_positive(name.substr(1), name);
    if (name[0] == 'B' && n < 2) throw SpecError("type B needs rank >= 2");
    auto m = unit_matrix(n);
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    if (name[0] == 'B') m[0][1] = m[1][0] = 4;
    return CoxeterMatrix(n, std::move(m));
  }
  throw SpecError("unknown group type '" + std::string(name) +
                  "' (expected An, Bn, I2(m) or I2(inf))");
}

CoxeterMatrix parse_matrix_spec(const std::string& type, const std::string& matrix_json) {
  if (type.empty() == matrix_json.empty())
    throw SpecError("give exactly one of --type or --matrix");
  if (!type.empty()) return preset(type);
  try {
    return coxeter_matrix_from_json(nlohmann::json::parse(matrix_json));
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("matrix is not valid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

Word parse_word(std::string_view text, int rank) {
  Word out;
  auto push = [&](int index, std::string_view token) {
    if (index < 0 || index >= rank)
      throw InputError("generator '" + std::string(token) + "' out of range for rank " +
                       std::to_string(rank));
    out.push_back(index);
  };
  if (text.empty() || text == "e") return out;

  const bool letters = text.find_first_not_of("stu,") == std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (letters) {
      push(text[i] == 's' ? 0 : text[i] == 't' ? 1 : 2, text.substr(i, 1));
      ++i;
      continue;
    }
    if (text[i] != 's')
      throw InputError("cannot parse word '" + std::string(text) + "' (use s1,s2,... or s,t,u)");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) throw InputError("generator without an index in '" + std::string(text) + "'");
    const std::string_view token = text.substr(i, j - i);
    int index = 0;
    std::from_chars(token.data() + 1, token.data() + token.size(), index);
    push(index - 1, token);
    i = j;
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Generator s : w) out += "s" + std::to_string(s + 1);
  return out;
}

std::uint64_t matrix_hash(const CoxeterMatrix& m) {
  nlohmann::json j;
  to_json(j, m);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json cache_header(const CoxeterMatrix& m, int bound) {
  return {{"matrix_hash", hex(matrix_hash(m))},
          {"rank", m.rank()},
          {"length_bound", bound},
          {"tool_version", kToolVersion}};
}

}  // namespace

std::string cache_document(const KLTable& k) {
  nlohmann::json doc{{"header", cache_header(k.table().matrix(), k.up_to_length())},
                     {"body", to_json(k)}};
  return doc.dump() + "\n";
}

KLTable load_cache(const GroupTable& t, int bound, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("header") || !doc.contains("body"))
    throw CacheError("cache lacks header or body");
  const nlohmann::json expected = cache_header(t.matrix(), bound);
  const nlohmann::json& header = doc["header"];
  for (const char* key : {"matrix_hash", "rank", "length_bound", "tool_version"})
    if (!header.is_object() || !header.contains(key) || header[key] != expected[key])
      throw CacheError(std::string("cache ") + key + " mismatch: have " +
                       (header.is_object() ? header.value(key, nlohmann::json()).dump() : "?") +
                       ", need " + expected[key].dump());
  try {
    return kl_table_from_json(t, doc["body"]);
  } catch (const std::exception& e) {
    throw CacheError(std::string("cache body unreadable: ") + e.what());
  }
}

namespace {

struct GroupOptions {
  std::string type;
  std::string matrix;
  std::size_t cap = 100000;
};

void add_group_options(CLI::App* cmd, GroupOptions& g) {
  cmd->add_option("--type", g.type, "preset: An, Bn, I2(m), I2(inf)");
  cmd->add_option("--matrix", g.matrix, R"(Coxeter matrix JSON {"rank":n,"m":[[...]]}, 0 = infinity)");
  cmd->add_option("--cap", g.cap, "maximum number of elements to enumerate")
      ->check(CLI::PositiveNumber);
}

GroupTable build_group(const GroupOptions& g) {
  return GroupTable::build(parse_matrix_spec(g.type, g.matrix), g.cap);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CacheError("cannot read cache " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Explicit --cache wins; otherwise KLCAT_CACHE_DIR selects a per-matrix file.
std::filesystem::path cache_path(const std::string& flag, const CoxeterMatrix& m, int bound) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv("KLCAT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / ("kl-" + hex(matrix_hash(m)) + "-L" + std::to_string(bound) + ".json");
}

KLTable obtain_kl(const GroupTable& t, int bound, const std::string& cache_flag, unsigned threads) {
  if (bound > t.complete_length())
    throw SpecError("length bound " + std::to_string(bound) + " exceeds the enumerated part (" +
                    std::to_string(t.complete_length()) + "); raise --cap");
  const auto path = cache_path(cache_flag, t.matrix(), bound);
  if (!path.empty() && std::filesystem::exists(path)) return load_cache(t, bound, read_file(path));
  KLTable k = compute_kl(t, bound, {DescentChoice::smallest, threads});
  if (!path.empty()) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!(os << cache_document(k))) throw CacheError("cannot write cache " + path.string());
  }
  return k;
}

int default_bound(const GroupTable& t, int requested) {
  return requested < 0 ? t.complete_length() : requested;
}

void print_group(const GroupTable& t, const GroupOptions& g, bool json, std::ostream& out) {
  const int top = t.complete_length();
  std::vector<std::size_t> counts;
  for (int len = 0; len <= top; ++len) counts.push_back(t.count_of_length(len));
  if (json) {
    nlohmann::json j{{"rank", t.rank()}, {"partial", t.is_partial()},
                     {"elements", t.size()},  {"complete_length", top},
                     {"counts", counts}};
    to_json(j["matrix"], t.matrix());
    if (!t.is_partial()) {
      j["order"] = t.size();
      j["longest_length"] = top;
    }
    out << j.dump() << "\n";
    return;
  }
  out << "group " << (g.type.empty() ? std::string("custom") : g.type) << " rank " << t.rank()
      << "\n";
  if (t.is_partial())
    out << "order partial (cap " << g.cap << "): " << t.size()
        << " elements, complete through length " << top << "\n";
  else
    out << "order " << t.size() << "\nlongest_length " << top << "\n";
  out << "counts";
  for (auto c : counts) out << " " << c;
  out << "\n";
}

void print_csv(const KLTable& k, std::ostream& out) {
  const GroupTable& t = k.table();
  out << "x,w,h,P,mu\n";
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Element w = t.element(i);
    for (const auto& [x, h] : k.basis(w).support()) {
      const QPoly p = to_P(h, t.length(x), t.length(w));
      out << format_word(t.word(x)) << "," << format_word(t.word(w)) << "," << h.to_string()
          << "," << p.to_string() << "," << mu(k, x, w) << "\n";
    }
  }
}

nlohmann::json failure_json(const GroupTable& t, const IdentityCheck& c) {
  nlohmann::json j = to_json(t, c);
  j["word"] = format_word(c.word);
  j["x"] = format_word(t.word(c.x));
  if (c.u) j["u"] = format_word(t.word(*c.u));
  if (c.z) j["z"] = format_word(t.word(*c.z));
  j["lhs"] = c.lhs.to_string();
  j["rhs"] = c.rhs.to_string();
  return j;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig combinatorics: Coxeter groups, KL tables, light leaves, branching", "klcat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GroupOptions group_opts;
  bool json = false;
  CLI::App* group = app.add_subcommand("group", "summarize a Coxeter group");
  add_group_options(group, group_opts);
  group->add_flag("--json", json, "JSON instead of text");

  int up_to = -1;
  std::string format = "csv";
  std::string cache;
  unsigned threads = 1;
  CLI::App* kl = app.add_subcommand("kl", "compute or reload a KL table");
  add_group_options(kl, group_opts);
  kl->add_option("--up-to", up_to, "length bound (default: everything enumerated)");
  kl->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  kl->add_option("--cache", cache, "cache file; reused when present, written otherwise");
  kl->add_option("--threads", threads, "workers per length stratum")->check(CLI::PositiveNumber);

  std::string word_text;
  CLI::App* cells = app.add_subcommand("cells", "cell data of a reduced expression");
  add_group_options(cells, group_opts);
  cells->add_option("--word", word_text, "reduced expression, e.g. s2,s1,s3,s2")->required();
  cells->add_option("--cache", cache, "KL cache file");

  std::string suite_text = "all";
  std::string report_path;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_group_options(verify, group_opts);
  verify->add_option("--suite", suite_text, "kl, leaves, branch, recursion or all")
      ->check(CLI::IsMember({"kl", "leaves", "branch", "recursion", "all"}));
  verify->add_option("--up-to", up_to, "length bound (default: everything enumerated)");
  verify->add_option("--threads", threads, "workers")->check(CLI::PositiveNumber);
  verify->add_option("--cache", cache, "KL cache file");
  verify->add_option("--report", report_path, "write every check as JSON to this file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    const GroupTable t = build_group(group_opts);
    if (group->parsed()) {
      print_group(t, group_opts, json, out);
      return kPass;
    }
    if (kl->parsed()) {
      const KLTable k = obtain_kl(t, default_bound(t, up_to), cache, threads);
      if (format == "json")
        out << cache_document(k);
      else
        print_csv(k, out);
      return kPass;
    }
    if (cells->parsed()) {
      const Word word = parse_word(word_text, t.rank());
      if (!t.is_reduced(word)) throw InputError(format_word(word) + " is not a reduced expression");
      const KLTable k = obtain_kl(t, static_cast<int>(word.size()), cache, 1);
      const CellDatum d = build_cell_datum(k, word);
      const Report checks = verify_cell_invariants(k, d);
      nlohmann::json j = to_json(t, d, checks);
      out << j.dump(2) << "\n";
      return all_pass(checks) ? kPass : kIdentityFailure;
    }
    // verify
    const auto suite = parse_suite(suite_text);
    if (!suite) throw InputError("unknown suite " + suite_text);
    const KLTable k = obtain_kl(t, default_bound(t, up_to), cache, threads);
    const auto reports = run_suite(k, *suite, threads, !report_path.empty());
    bool pass = true;
    nlohmann::json full = nlohmann::json::object();
    for (const auto& r : reports) {
      pass = pass && r.failures == 0;
      out << "suite " << suite_name(r.suite) << ": " << r.total << " checks, " << r.failures
          << " failures: " << (r.failures == 0 ? "PASS" : "FAIL") << "\n";
      std::size_t shown = 0;
      for (const auto& c : r.checks)
        if (!c.pass && shown++ < 10) out << "  " << failure_json(t, c).dump() << "\n";
      if (!report_path.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : r.checks) rows.push_back(failure_json(t, c));
        full[std::string(suite_name(r.suite))] = std::move(rows);
      }
    }
    if (!report_path.empty()) {
      std::ofstream os(report_path, std::ios::binary);
      os << full.dump(1) << "\n";
      if (!os) throw InputError("cannot write report " + report_path);
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kPass : kIdentityFailure;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << "\n";
    return kCacheError;
  } catch (const PartialTableError& e) {
    err << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace klcat::cli
