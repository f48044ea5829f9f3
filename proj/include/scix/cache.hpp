#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include <json.hpp>

namespace scix {

/// On-disk results cache: one self-contained JSON record per line, keyed by
/// the canonical request string (operation name + canonical input encoding
/// + version). Append-only with compaction on demand; corrupt lines are
/// discarded with a warning and never trusted. Purely advisory — deleting
/// the file never changes any result.
class ResultCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    file_ = dir_ / "cache.jsonl";
    load();
  }

  /// SCIX_CACHE_DIR overrides the default ./.scix-cache location.
  static std::filesystem::path env_dir() {
    if (const char* dir = std::getenv("SCIX_CACHE_DIR")) return dir;
    return ".scix-cache";
  }

  const std::filesystem::path& file() const { return file_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<nlohmann::json> get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, nlohmann::json payload) {
    std::lock_guard<std::mutex> lock(mu_);
    nlohmann::json record;
    record["digest"] = digest(key);
    record["version"] = kFormatVersion;
    record["key"] = key;
    record["payload"] = payload;
    std::filesystem::create_directories(dir_);
    std::ofstream out(file_, std::ios::app);
    out << record.dump() << "\n";
    entries_[key] = std::move(payload);
  }

  /// Rewrites the file with one record per live key.
  void compact() {
    std::lock_guard<std::mutex> lock(mu_);
    std::filesystem::create_directories(dir_);
    std::ofstream out(file_, std::ios::trunc);
    for (const auto& [key, payload] : entries_) {
      nlohmann::json record;
      record["digest"] = digest(key);
      record["version"] = kFormatVersion;
      record["key"] = key;
      record["payload"] = payload;
      out << record.dump() << "\n";
    }
  }

  static std::string digest(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

 private:
  void load() {
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    std::size_t corrupt = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object() || !record.contains("key") ||
          !record.contains("payload") || !record.contains("digest") ||
          record.value("version", -1) != kFormatVersion ||
          record["digest"] != digest(record["key"].get<std::string>())) {
        ++corrupt;
        continue;
      }
      entries_[record["key"].get<std::string>()] = record["payload"];
    }
    if (corrupt > 0)
      std::cerr << "scix: cache: discarded " << corrupt << " corrupt record(s) in " << file_ << "\n";
  }

  std::filesystem::path dir_;
  std::filesystem::path file_;
  std::unordered_map<std::string, nlohmann::json> entries_;
  std::mutex mu_;
};

}  // namespace scix
