// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "igarima/errors.hpp"

namespace igarima {

/// Validated positive-valued lifetime sample with provenance metadata.
/// Values are immutable after construction and keep their file order.
class Dataset {
 public:
  Dataset(std::string name, Eigen::ArrayXd values, std::string source = "");

  const std::string& name() const noexcept { return name_; }
  const std::string& source() const noexcept { return source_; }
  const Eigen::ArrayXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  double mean() const { return values_.mean(); }

 private:
  std::string name_;
  Eigen::ArrayXd values_;
  std::string source_;
};

/// One observation per line; `#` comments, blank lines and an optional
/// `value` header are accepted; LF or CRLF endings. Any non-numeric,
/// non-finite or non-positive entry is rejected with its line number.
Dataset load_csv(const std::filesystem::path& path);

/// Same grammar, parsing from an in-memory buffer (name for diagnostics).
Dataset parse_csv(std::string_view text, std::string name);

/// Writes one observation per line with shortest round-trip formatting, so
/// a reload reproduces the values bit for bit.
void write_csv(const Dataset& dataset, std::ostream& out);

/// FNV-1a 64-bit checksum, the integrity check used by the data manifest.
std::uint64_t fnv1a64(std::string_view bytes);

struct ManifestEntry {
  std::string name;
  Eigen::Index n = 0;
  std::uint64_t checksum = 0;
  std::string source;
};

/// Directory holding the bundled datasets and their MANIFEST. Resolution
/// order: IGARIMA_DATA_DIR environment variable, then the configured
/// source-tree location, then ./data.
std::filesystem::path default_data_dir();

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& data_dir);

/// Loads a bundled dataset by manifest name, verifying the file checksum
/// and the recorded sample size.
Dataset builtin(std::string_view name);
Dataset builtin(std::string_view name, const std::filesystem::path& data_dir);

}  // namespace igarima
