#include "aps/store.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace aps {

namespace {

std::string key_of(const Subset& I) { return encode(canonical_primitive(I)).get_str(16); }

}  // namespace

CertificateStore::CertificateStore(std::string path) : path_(std::move(path)) {
  if (!path_.empty()) load();
}

void CertificateStore::load() {
  std::ifstream in(path_);
  if (!in) return;  // missing file is an empty store
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      DescentCertificate c = certificate_from_json(line);
      records_.emplace(key_of(c.subset), std::move(c));
    } catch (const std::exception& e) {
      errors_.push_back(path_ + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::size_t CertificateStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

std::optional<DescentCertificate> CertificateStore::find(const Subset& I) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = records_.find(key_of(I));
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

bool CertificateStore::append(const DescentCertificate& c) {
  const std::string key = key_of(c.subset);
  std::lock_guard<std::mutex> lock(mu_);
  if (records_.count(key)) return false;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot write certificate store " + path_);
    out << certificate_to_json(c) << '\n';
  }
  records_.emplace(key, c);
  return true;
}

std::vector<DescentCertificate> CertificateStore::all() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<DescentCertificate> out;
  for (const auto& [k, c] : records_) out.push_back(c);
  return out;
}

std::string CertificateStore::resolve_path(const std::string& fallback) {
  if (const char* env = std::getenv("AP_SQUARES_CACHE"); env && *env) return env;
  return fallback;
}

}  // namespace aps
