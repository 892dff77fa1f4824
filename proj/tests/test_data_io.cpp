// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "igarima/data_io.hpp"
#include "igarima/igarima.hpp"
#include "igarima/inference.hpp"

using namespace igarima;
namespace fs = std::filesystem;

TEST_CASE("builtin datasets load with the recorded sizes") {
  const struct {
    const char* name;
    Eigen::Index n;
    double mean;
  } expected[] = {
      {"vinyl_chloride", 34, 1.8794117647058823},
      {"bladder_cancer", 128, 9.209375},
      {"air_conditioning", 30, 59.6},
      {"insulating_fluid", 19, 14.358947368421053},
  };
  for (const auto& e : expected) {
    const Dataset d = builtin(e.name);
    CHECK(d.name() == e.name);
    CHECK(d.size() == e.n);
    CHECK(d.mean() == doctest::Approx(e.mean).epsilon(1e-12));
    CHECK((d.values() > 0.0).all());
    CHECK_FALSE(d.source().empty());
  }
  CHECK_THROWS_AS(builtin("nonexistent"), DataError);
}

TEST_CASE("moment-matching sanity against the fitted parameter") {
  const Dataset d = builtin("vinyl_chloride");
  const double theta_hat = 0.674;
  const double implied_mean = (theta_hat + 4.0) / (theta_hat * (theta_hat + 3.0));
  CHECK(std::abs(d.mean() - implied_mean) / implied_mean < 0.05);
}

TEST_CASE("manifest checksum guards against perturbed data") {
  const fs::path tmp = fs::temp_directory_path() / "igarima_perturbed_data";
  fs::create_directories(tmp);
  const fs::path src = default_data_dir();
  for (const auto& entry : fs::directory_iterator(src)) {
    fs::copy_file(entry.path(), tmp / entry.path().filename(),
                  fs::copy_options::overwrite_existing);
  }
  CHECK(builtin("vinyl_chloride", tmp).size() == 34);

  {
    std::ofstream out(tmp / "vinyl_chloride.csv", std::ios::app);
    out << "9.9\n";
  }
  CHECK_THROWS_WITH_AS(builtin("vinyl_chloride", tmp),
                       doctest::Contains("checksum mismatch"), DataError);
  fs::remove_all(tmp);
}

TEST_CASE("csv parsing accepts the documented grammar") {
  const Dataset a = parse_csv("1.0\n2.5\n0.3\n", "inline");
  REQUIRE(a.size() == 3);
  CHECK(a.values()[0] == 1.0);
  CHECK(a.values()[1] == 2.5);
  CHECK(a.values()[2] == 0.3);

  const Dataset b = parse_csv("# comment\nvalue\n4.0\r\n5.0\n\n", "inline");
  CHECK(b.size() == 2);
  CHECK(b.values()[0] == 4.0);

  const Dataset c = parse_csv("Value\n1\n2", "inline");  // header, any case
  CHECK(c.size() == 2);
}

TEST_CASE("csv parsing rejects bad input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_csv("1.0\n-1.0\n2.0\n", "bad"),
                       doctest::Contains("line 2"), DataError);
  CHECK_THROWS_WITH_AS(parse_csv("1.0\n2.0\nabc\n", "bad"),
                       doctest::Contains("line 3"), DataError);
  CHECK_THROWS_WITH_AS(parse_csv("1.0\n0\n", "bad"),
                       doctest::Contains("line 2"), DataError);
  CHECK_THROWS_WITH_AS(parse_csv("1.0\ninf\n", "bad"),
                       doctest::Contains("line 2"), DataError);
  CHECK_THROWS_AS(parse_csv("", "empty"), DataError);
  CHECK_THROWS_AS(parse_csv("# only comments\n", "empty"), DataError);
  // a lone observation is below the minimum sample size
  CHECK_THROWS_AS(parse_csv("1.0\n", "single"), DataError);
  CHECK_THROWS_AS(load_csv("/nonexistent/igarima.csv"), DataError);
}

TEST_CASE("write then reload reproduces values bit for bit") {
  const Dataset original = builtin("bladder_cancer");
  std::ostringstream buffer;
  write_csv(original, buffer);
  const Dataset reloaded = parse_csv(buffer.str(), "roundtrip");
  REQUIRE(reloaded.size() == original.size());
  CHECK(std::memcmp(original.values().data(), reloaded.values().data(),
                    sizeof(double) * original.size()) == 0);

  // sampled values survive the same round trip
  const IGarima d{Theta(0.674)};
  const Dataset sampled("draws", d.sample(500, 7));
  std::ostringstream buffer2;
  write_csv(sampled, buffer2);
  const Dataset reloaded2 = parse_csv(buffer2.str(), "roundtrip2");
  CHECK(std::memcmp(sampled.values().data(), reloaded2.values().data(),
                    sizeof(double) * sampled.size()) == 0);
}

TEST_CASE("fnv1a64 known vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("manifest entries carry provenance") {
  const auto entries = read_manifest(default_data_dir());
  REQUIRE(entries.size() == 4);
  for (const auto& e : entries) {
    CHECK_FALSE(e.source.empty());
    CHECK(e.n >= 19);
    const fs::path file = default_data_dir() / (e.name + ".csv");
    std::ifstream in(file, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    CHECK(fnv1a64(bytes.str()) == e.checksum);
  }
}

TEST_CASE("dataset validation") {
  Eigen::ArrayXd ok(3);
  ok << 1.0, 2.0, 3.0;
  CHECK(Dataset("ok", ok).size() == 3);

  Eigen::ArrayXd negative(2);
  negative << 1.0, -2.0;
  CHECK_THROWS_AS(Dataset("neg", negative), DataError);

  Eigen::ArrayXd single(1);
  single << 1.0;
  CHECK_THROWS_AS(Dataset("single", single), DataError);
}
