#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace schubert {

// Bumped whenever a convention that changes computed output changes; it is
// folded into cache keys and written into reports.
inline constexpr std::string_view kConventionVersion =
    "conventions-1: grlex x<t<y<b; (uv)(i)=u(v(i)); alpha_i=t_{i+1}-t_i; "
    "pi_i=d_i((1+b*x_{i+1})f); G_w0=prod(x_i-(-)y_j)";
inline constexpr std::string_view kToolVersion = "1.0.0";

// On-disk JSON cache, one file per key. Writes go to a temporary file that is
// renamed into place, so readers see either nothing or a complete entry.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path directory);

  // SHA-256 (hex) of the convention version and the canonical request.
  static std::string key_for(std::string_view request);

  // Entries that do not parse as JSON count as misses and are removed.
  std::optional<std::string> get(std::string_view request) const;
  void put(std::string_view request, std::string_view json) const;

  const std::filesystem::path& directory() const { return directory_; }

private:
  std::filesystem::path path_for(std::string_view request) const;

  std::filesystem::path directory_;
};

// Writes `contents` to `path` through a sibling temporary file and rename.
// Throws std::filesystem::filesystem_error or std::ios_base::failure.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

} // namespace schubert
