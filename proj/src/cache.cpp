#include "schubert/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <openssl/evp.h>
#include <unistd.h>

#include "json.hpp"

namespace schubert {

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_MD_CTX* context = EVP_MD_CTX_new();
  EVP_DigestInit_ex(context, EVP_sha256(), nullptr);
  EVP_DigestUpdate(context, data.data(), data.size());
  EVP_DigestFinal_ex(context, digest, &length);
  EVP_MD_CTX_free(context);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 0xF];
  }
  return out;
}

} // namespace

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  static std::atomic<unsigned long> counter{0};
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id())
         << '.' << counter++;
  std::filesystem::path temporary = path;
  temporary += suffix.str();
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    out.exceptions(std::ios::failbit | std::ios::badbit);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
  }
  std::filesystem::rename(temporary, path);
}

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(directory_);
}

std::string ResultCache::key_for(std::string_view request) {
  std::string material(kConventionVersion);
  material += '\n';
  material += request;
  return sha256_hex(material);
}

std::filesystem::path ResultCache::path_for(std::string_view request) const {
  return directory_ / (key_for(request) + ".json");
}

std::optional<std::string> ResultCache::get(std::string_view request) const {
  const auto path = path_for(request);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!nlohmann::json::accept(contents)) {
    std::error_code ignored;
    std::filesystem::remove(path, ignored);
    return std::nullopt;
  }
  return contents;
}

void ResultCache::put(std::string_view request, std::string_view json) const {
  write_file_atomically(path_for(request), json);
}

} // namespace schubert
