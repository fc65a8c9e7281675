#include "cubelab/oeis.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include <httplib.h>

#include "cubelab/error.hpp"

namespace cubelab::oeis {

namespace fs = std::filesystem;

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::string bfile_name(std::string_view anum) { return "b" + std::string(anum.substr(1)) + ".txt"; }

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// One writer per identifier within the process; the rename makes the
/// update atomic for concurrent readers.
std::mutex& writer_lock(std::string_view anum) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::mutex, std::less<>> locks;
  std::lock_guard guard(registry_mutex);
  return locks[std::string(anum)];
}

void write_cache(const fs::path& dir, const BFile& file) {
  std::lock_guard guard(writer_lock(file.anum));
  fs::create_directories(dir);
  const fs::path target = dir / bfile_name(file.anum);
  const fs::path tmp = dir / (bfile_name(file.anum) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw OeisError("cannot write cache file " + tmp.string());
    out << format_bfile(file);
  }
  fs::rename(tmp, target);
}

void check_anum(std::string_view anum) {
  if (!is_valid_anum(anum)) throw OeisError("invalid OEIS identifier '" + std::string(anum) + "'");
}

}  // namespace

std::string to_string(Source source) {
  switch (source) {
    case Source::Network: return "network";
    case Source::Cache: return "cache";
    case Source::Fixture: return "fixture";
  }
  return "unknown";
}

std::optional<BigInt> BFile::at(long long index) const {
  for (const auto& [i, v] : terms)
    if (i == index) return v;
  return std::nullopt;
}

bool is_valid_anum(std::string_view anum) {
  static const std::regex pattern("^A\\d{6}$");
  return std::regex_match(anum.begin(), anum.end(), pattern) && anum != "A000000";
}

BFile parse_bfile(std::string_view anum, std::string_view text) {
  check_anum(anum);
  BFile file;
  file.anum = std::string(anum);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string index_tok, value_tok, extra;
    if (!(fields >> index_tok >> value_tok) || (fields >> extra) || !is_integer_token(index_tok) ||
        !is_integer_token(value_tok))
      throw OeisError(file.anum + " line " + std::to_string(lineno) + ": malformed b-file line '" + line + "'");
    const long long index = std::stoll(index_tok);
    if (!file.terms.empty() && index <= file.terms.back().first)
      throw OeisError(file.anum + " line " + std::to_string(lineno) + ": indices must increase");
    file.terms.emplace_back(index, BigInt(value_tok));
  }
  return file;
}

std::string format_bfile(const BFile& file) {
  std::string out;
  for (const auto& [i, v] : file.terms) out += std::to_string(i) + " " + v.str() + "\n";
  return out;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("CUBELAB_OEIS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "cubelab" / "oeis";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "cubelab" / "oeis";
  return fs::temp_directory_path() / "cubelab-oeis";
}

fs::path bundled_fixture_dir() { return CUBELAB_FIXTURE_DIR; }

BFile fetch(std::string_view anum, bool offline, const ClientOptions& options) {
  check_anum(anum);
  const fs::path cache_dir = options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
  const fs::path fixture_dir = options.fixture_dir.empty() ? bundled_fixture_dir() : options.fixture_dir;
  const std::string name = bfile_name(anum);

  if (auto text = read_file(cache_dir / name)) {
    BFile file = parse_bfile(anum, *text);
    file.source = Source::Cache;
    return file;
  }
  if (offline) {
    if (auto text = read_file(fixture_dir / name)) {
      BFile file = parse_bfile(anum, *text);
      file.source = Source::Fixture;
      return file;
    }
    throw OeisError(std::string(anum) + " is neither cached nor bundled and network access is disabled");
  }

  httplib::Client client(options.base_url);
  client.set_follow_location(true);
  client.set_connection_timeout(options.timeout_seconds);
  client.set_read_timeout(options.timeout_seconds);
  const std::string path = "/" + std::string(anum) + "/" + name;
  auto response = client.Get(path);
  if (!response) throw OeisError("request for " + path + " failed: " + httplib::to_string(response.error()));
  if (response->status != 200)
    throw OeisError("request for " + path + " returned HTTP " + std::to_string(response->status));
  BFile file = parse_bfile(anum, response->body);
  file.source = Source::Network;
  write_cache(cache_dir, file);
  return file;
}

Comparison compare(const std::vector<BigInt>& local, const BFile& remote, long long offset) {
  Comparison c;
  for (std::size_t i = 0; i < local.size(); ++i) {
    const auto value = remote.at(offset + static_cast<long long>(i));
    if (!value) continue;
    ++c.overlap;
    if (*value == local[i]) {
      ++c.matched;
    } else if (!c.first_mismatch) {
      c.first_mismatch = Mismatch{i, local[i], *value};
    }
  }
  return c;
}

const std::vector<FixtureLink>& fixture_links() {
  static const std::vector<FixtureLink> links{
      {SequenceId::Trinomial, "A027907", 1, 0},
      {SequenceId::PowTriMult, "A038717", 1, 0},
      {SequenceId::A013609, "A013609", 1, 0},
      {SequenceId::A038220, "A038220", 1, 0},
      {SequenceId::A080956Neg, "A080956", -1, 0},
      {SequenceId::A075848, "A075848", 1, 0},
      {SequenceId::A072221, "A072221", 1, 0},
      {SequenceId::A120908, "A120908", 1, 2},
      {SequenceId::A003946Neg, "A003946", -1, 1},
      {SequenceId::A060188, "A060188", 1, 0},
      {SequenceId::A279019, "A279019", 1, 0},
  };
  return links;
}

}  // namespace cubelab::oeis
