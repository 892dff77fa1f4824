// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "igarima/inference.hpp"
#include "igarima/reference_table.hpp"

namespace igarima {

/// One checked cell of the reproduction diff.
struct CellDiff {
  int block = 0;
  std::string_view dataset;
  Family family = Family::IGarima;
  std::string_view metric;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool within_tol = false;
  bool advisory = false;  // reported, never binding
};

struct ReproductionReport {
  std::vector<CellDiff> cells;
  std::vector<ComparisonTable> blocks;  // computed tables, reference order
  bool igarima_ok = false;              // every i-Garima cell within tolerance
  bool binding_ok = false;              // every non-advisory cell within tolerance
  double seconds = 0.0;
};

/// Refits every reference (dataset, family) pair from the bundled data and
/// diffs each metric against the published value at the configured
/// tolerances. A printed p-value of 0.0000 is read as "below 5e-5".
ReproductionReport reproduce_reference_table(const std::filesystem::path& data_dir);
ReproductionReport reproduce_reference_table();

}  // namespace igarima
