#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <fstream>
#include <functional>
#include <string>

#include "doctest.h"
#include "errors.hpp"
#include "fridge.hpp"

using namespace cryoeo;

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace

TEST_CASE("closed-form cooling curve") {
  const FridgeModel fridge;
  CHECK(boundary_temperature(fridge, 0.0) == doctest::Approx(0.02));
  CHECK(boundary_temperature(fridge, 0.58e-3) ==
        doctest::Approx(0.122065556157337).epsilon(1e-12));
  CHECK(boundary_temperature(fridge, 1e-3) ==
        doctest::Approx(0.159373774505092).epsilon(1e-12));
  for (double P : {1e-6, 5e-5, 2e-4, 1.5e-3, 1e-2}) {
    CHECK(boundary_temperature(fridge, P) ==
          doctest::Approx(std::sqrt(0.02 * 0.02 + P / 0.04)).epsilon(1e-14));
  }

  CHECK(code_of([&] { (void)boundary_temperature(fridge, -1e-6); }) ==
        ErrorCode::InvalidArgument);
  FridgeModel broken;
  broken.kappa_f = 0.0;
  CHECK(code_of([&] { (void)boundary_temperature(broken, 1e-3); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("time-averaged stage load per pump schedule") {
  PumpSchedule sched;
  sched.P_o = 1e-3;
  CHECK(average_heat_load(sched) == doctest::Approx(1e-3));

  sched.mode = PumpSchedule::Mode::Instant;
  CHECK(average_heat_load(sched) == doctest::Approx(1e-3));

  sched.mode = PumpSchedule::Mode::Pulsed;
  sched.duty = 0.01;
  CHECK(average_heat_load(sched) == doctest::Approx(1e-5));
  sched.duty = 1.0;  // continuous limit
  CHECK(average_heat_load(sched) == doctest::Approx(1e-3));

  sched.mode = PumpSchedule::Mode::Cw;
  sched.heat_fraction = 0.4;
  CHECK(average_heat_load(sched) == doctest::Approx(0.4e-3));

  PumpSchedule bad;
  bad.mode = PumpSchedule::Mode::Pulsed;
  bad.duty = 0.0;
  CHECK(code_of([&] { (void)average_heat_load(bad); }) ==
        ErrorCode::InvalidArgument);
  bad.duty = 1.2;
  CHECK(code_of([&] { (void)average_heat_load(bad); }) ==
        ErrorCode::InvalidArgument);
  bad.duty = 0.5;
  bad.P_o = -1e-3;
  CHECK(code_of([&] { (void)average_heat_load(bad); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("tabulated cooling curve interpolates and clamps") {
  write_file("fridge_ok.csv",
             "P_W, T_K\n"
             "1e-4, 0.015\n"
             "1e-3, 0.100\n"
             "2e-3, 0.160\n"
             "5e-3, 0.300\n");
  const FridgeModel fridge = load_fridge_table("fridge_ok.csv");
  CHECK(fridge.base_temp == doctest::Approx(0.015));
  REQUIRE(fridge.table_P.size() == 4);

  // Exact at the nodes.
  CHECK(boundary_temperature(fridge, 1e-3) == doctest::Approx(0.100));
  CHECK(boundary_temperature(fridge, 5e-3) == doctest::Approx(0.300));
  // Linear in between.
  CHECK(boundary_temperature(fridge, 1.5e-3) == doctest::Approx(0.130));
  CHECK(boundary_temperature(fridge, 0.55e-3) ==
        doctest::Approx(0.015 + 0.5 * (0.100 - 0.015)).epsilon(1e-12));
  // Out-of-range loads clamp to the table ends.
  CHECK(boundary_temperature(fridge, 0.0) == doctest::Approx(0.015));
  CHECK(boundary_temperature(fridge, 1.0) == doctest::Approx(0.300));
}

TEST_CASE("malformed cooling tables are rejected") {
  CHECK(code_of([] { (void)load_fridge_table("no_such_table.csv"); }) ==
        ErrorCode::IoError);

  write_file("fridge_hdr.csv", "load, temp\n0, 0.02\n1e-3, 0.1\n");
  CHECK(code_of([] { (void)load_fridge_table("fridge_hdr.csv"); }) ==
        ErrorCode::ParseError);

  write_file("fridge_short.csv", "P_W, T_K\n0, 0.02\n");
  CHECK(code_of([] { (void)load_fridge_table("fridge_short.csv"); }) ==
        ErrorCode::ParseError);

  write_file("fridge_nonmono.csv", "P_W, T_K\n0, 0.02\n2e-3, 0.1\n1e-3, 0.2\n");
  CHECK(code_of([] { (void)load_fridge_table("fridge_nonmono.csv"); }) ==
        ErrorCode::ParseError);

  write_file("fridge_cooling.csv", "P_W, T_K\n0, 0.05\n1e-3, 0.04\n");
  CHECK(code_of([] { (void)load_fridge_table("fridge_cooling.csv"); }) ==
        ErrorCode::ParseError);

  // Parse failures carry the offending line number.
  write_file("fridge_garbage.csv", "P_W, T_K\n0, 0.02\nbanana, 0.1\n");
  try {
    (void)load_fridge_table("fridge_garbage.csv");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
