// SPDX-License-Identifier: Apache-2.0

#include "igarima/data_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#ifndef IGARIMA_SOURCE_DATA_DIR
#define IGARIMA_SOURCE_DATA_DIR "data"
#endif

namespace igarima {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Dataset::Dataset(std::string name, Eigen::ArrayXd values, std::string source)
    : name_(std::move(name)), values_(std::move(values)),
      source_(std::move(source)) {
  if (values_.size() < 2) {
    throw DataError("dataset '" + name_ + "': needs at least 2 observations, got " +
                    std::to_string(values_.size()));
  }
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] <= 0.0) {
      throw DataError("dataset '" + name_ + "': value " +
                      std::to_string(values_[i]) + " at position " +
                      std::to_string(i + 1) + " is not a positive real");
    }
  }
}

Dataset parse_csv(std::string_view text, std::string name) {
  std::vector<double> values;
  std::size_t pos = 0;
  long line_no = 0;
  bool header_allowed = true;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (header_allowed && iequals(line, "value")) {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || end != line.data() + line.size()) {
      throw DataError(name + ": line " + std::to_string(line_no) +
                      ": not a number: '" + std::string(line) + "'");
    }
    if (!std::isfinite(v) || v <= 0.0) {
      throw DataError(name + ": line " + std::to_string(line_no) +
                      ": value must be a positive real, got '" +
                      std::string(line) + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw DataError(name + ": no observations found");
  }
  Eigen::ArrayXd arr = Eigen::Map<const Eigen::ArrayXd>(values.data(),
                                                        static_cast<Eigen::Index>(values.size()));
  return Dataset(std::move(name), std::move(arr));
}

Dataset load_csv(const std::filesystem::path& path) {
  return parse_csv(read_file(path), path.stem().string());
}

void write_csv(const Dataset& dataset, std::ostream& out) {
  char buf[32];
  for (Eigen::Index i = 0; i < dataset.size(); ++i) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), dataset.values()[i]);
    out.write(buf, res.ptr - buf);
    out.put('\n');
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("IGARIMA_DATA_DIR")) {
    return std::filesystem::path(env);
  }
  std::filesystem::path configured(IGARIMA_SOURCE_DATA_DIR);
  if (std::filesystem::exists(configured / "MANIFEST")) {
    return configured;
  }
  return std::filesystem::path("data");
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& data_dir) {
  const auto path = data_dir / "MANIFEST";
  const std::string text = read_file(path);
  std::vector<ManifestEntry> entries;
  std::istringstream in(text);
  std::string raw;
  long line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    ManifestEntry e;
    std::istringstream fields{std::string(line)};
    std::string n_str, checksum_str;
    if (!std::getline(fields, e.name, '\t') ||
        !std::getline(fields, n_str, '\t') ||
        !std::getline(fields, checksum_str, '\t') ||
        !std::getline(fields, e.source)) {
      throw DataError(path.string() + ": line " + std::to_string(line_no) +
                      ": expected name<TAB>n<TAB>checksum<TAB>source");
    }
    try {
      e.n = std::stol(n_str);
      e.checksum = std::stoull(checksum_str, nullptr, 16);
    } catch (const std::exception&) {
      throw DataError(path.string() + ": line " + std::to_string(line_no) +
                      ": malformed size or checksum");
    }
    entries.push_back(std::move(e));
  }
  if (entries.empty()) {
    throw DataError(path.string() + ": empty manifest");
  }
  return entries;
}

Dataset builtin(std::string_view name, const std::filesystem::path& data_dir) {
  const auto entries = read_manifest(data_dir);
  for (const auto& e : entries) {
    if (e.name != name) continue;
    const auto csv_path = data_dir / (e.name + ".csv");
    const std::string bytes = read_file(csv_path);
    const std::uint64_t actual = fnv1a64(bytes);
    if (actual != e.checksum) {
      std::ostringstream msg;
      msg << "dataset manifest checksum mismatch for '" << e.name << "': "
          << std::hex << actual << " != " << e.checksum;
      throw DataError(msg.str());
    }
    Dataset parsed = parse_csv(bytes, e.name);
    if (parsed.size() != e.n) {
      throw DataError("dataset '" + e.name + "': manifest records n = " +
                      std::to_string(e.n) + " but file holds " +
                      std::to_string(parsed.size()));
    }
    return Dataset(e.name, parsed.values(), e.source);
  }
  throw DataError("unknown builtin dataset: '" + std::string(name) + "'");
}

Dataset builtin(std::string_view name) {
  return builtin(name, default_data_dir());
}

}  // namespace igarima
