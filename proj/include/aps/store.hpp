#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "aps/descent.hpp"

namespace aps {

/// Append-only JSON-lines file of descent certificates keyed by the
/// canonical subset. Corrupt lines are skipped and listed in errors().
/// Lookups and appends are serialized by an internal lock.
class CertificateStore {
 public:
  /// An empty path keeps the store in memory only.
  explicit CertificateStore(std::string path = "");

  const std::string& path() const { return path_; }
  std::size_t size() const;
  const std::vector<std::string>& errors() const { return errors_; }

  std::optional<DescentCertificate> find(const Subset& I) const;
  /// Returns false when an entry with the same key already exists.
  bool append(const DescentCertificate& c);
  std::vector<DescentCertificate> all() const;

  /// Cache path: $AP_SQUARES_CACHE when set, otherwise `fallback`.
  static std::string resolve_path(const std::string& fallback);

 private:
  void load();

  mutable std::mutex mu_;
  std::string path_;
  std::map<std::string, DescentCertificate> records_;
  std::vector<std::string> errors_;
};

}  // namespace aps
