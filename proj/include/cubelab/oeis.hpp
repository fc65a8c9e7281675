#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubelab/rational.hpp"
#include "cubelab/sequences.hpp"

namespace cubelab::oeis {

enum class Source { Network, Cache, Fixture };

std::string to_string(Source source);

/// Parsed OEIS b-file: "index value" lines, '#' comments.
struct BFile {
  std::string anum;
  std::vector<std::pair<long long, BigInt>> terms;  // strictly increasing indices
  Source source = Source::Fixture;

  std::optional<BigInt> at(long long index) const;
};

/// True for "A" followed by six digits, excluding A000000.
bool is_valid_anum(std::string_view anum);

/// Throws OeisError on any line that is neither a '#' comment nor two integer
/// tokens, and on non-increasing indices.
BFile parse_bfile(std::string_view anum, std::string_view text);

/// Canonical text form written to the cache.
std::string format_bfile(const BFile& file);

struct ClientOptions {
  std::filesystem::path cache_dir;    // empty: CUBELAB_OEIS_CACHE or the user cache dir
  std::filesystem::path fixture_dir;  // empty: bundled fixtures
  std::string base_url = "https://oeis.org";
  int timeout_seconds = 20;
};

std::filesystem::path default_cache_dir();
std::filesystem::path bundled_fixture_dir();

/// offline: cache, then bundled fixture. online: cache, then network (the
/// result is written to the cache).
BFile fetch(std::string_view anum, bool offline = true, const ClientOptions& options = {});

struct Mismatch {
  std::size_t position = 0;
  BigInt local;
  BigInt remote;
};

struct Comparison {
  std::size_t matched = 0;  // equal positions within the overlap
  std::size_t overlap = 0;
  std::optional<Mismatch> first_mismatch;
};

/// local[i] against the remote term with index offset + i.
Comparison compare(const std::vector<BigInt>& local, const BFile& remote, long long offset);

/// How a generator lines up with a cited OEIS entry: local[i] * sign equals
/// the remote term with index remote_offset + i.
struct FixtureLink {
  SequenceId id;
  std::string anum;
  int sign = 1;
  long long remote_offset = 0;
};

const std::vector<FixtureLink>& fixture_links();

}  // namespace cubelab::oeis
