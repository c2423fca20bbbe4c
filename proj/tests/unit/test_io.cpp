#include <doctest.h>

#include <sstream>

#include "altexp/errors.hpp"
#include "altexp/io.hpp"
#include "oracles.hpp"

using namespace altexp;

namespace {

SampleSet random_samples(const GridSpec& grid, unsigned seed) {
  const auto values = oracle::random_values(domain_size(grid.N), seed);
  SampleSet s{grid, {}};
  std::size_t i = 0;
  for (const auto& gp : grid_points(grid)) s.values.emplace(gp.index, values[i++]);
  return s;
}

}  // namespace

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("grid CSV") {
  std::ostringstream os;
  io::write_grid_csv(os, {0.0, 0.0, 3, 1.0});
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,s,t,x,y,z");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 11);
  CHECK(os.str().find("2,2,2,0.66666666666666663,0.66666666666666663,0.66666666666666663") != std::string::npos);
}

TEST_CASE("sample CSV round trip") {
  const auto s = random_samples({0.25, 0.5, 4, 1.0}, 3);
  std::stringstream buf;
  io::write_samples_csv(buf, s);
  const auto back = io::read_samples_csv(buf, "mem", {0.25, 0.5, 1, 1.0});
  CHECK(back.grid == s.grid);
  CHECK(back.values == s.values);

  std::stringstream again;
  io::write_samples_csv(again, back);
  std::stringstream first;
  io::write_samples_csv(first, s);
  CHECK(again.str() == first.str());
}

TEST_CASE("cube CSV round trip") {
  const GridSpec grid{0.0, 0.5, 3, 2.0};
  const CubeSampleSet cube{grid, oracle::random_values(27, 8)};
  std::stringstream buf;
  io::write_cube_samples_csv(buf, cube);
  const auto back = io::read_cube_samples_csv(buf, "mem", {0.0, 0.5, 1, 2.0});
  CHECK(back.values == cube.values);
  CHECK(back.grid == grid);
}

TEST_CASE("sample CSV errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_samples_csv(in, "in.csv", {0.0, 0.0, 1, 1.0});
  };
  try {
    parse("r,s,t,re,im\n0,0,0,1,0\n1,0,0,abc,0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("in.csv:3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("x,y\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("r,s,t,re,im\n0,0,0,1\n"), ParseError);
  CHECK_THROWS_AS(parse("r,s,t,re,im\n0.5,0,0,1,0\n"), ParseError);
  CHECK_THROWS_AS(parse("r,s,t,re,im\n0,1,2,1,0\n"), DimensionError);
  CHECK_THROWS_AS(parse("r,s,t,re,im\n0,0,0,1,0\n0,0,0,1,0\n"), DimensionError);

  std::istringstream in("r,s,t,re,im\n0,0,0,1,0\n1,0,0,1,0\n");
  CHECK_THROWS_AS(io::read_samples_csv(in, "in.csv", {0.0, 0.0, 1, 1.0}, 3), DimensionError);

  std::istringstream cube("r,s,t,re,im\n0,0,0,1,0\n1,1,1,1,0\n");
  CHECK_THROWS_AS(io::read_cube_samples_csv(cube, "c.csv", {0.0, 0.0, 1, 1.0}), MissingEntryError);
}

TEST_CASE("coefficient JSON round trip") {
  CoefficientSet beta{{0.125, 0.5, 3, 1.0}, CoefficientRole::beta, std::nullopt, {}};
  const auto values = oracle::random_values(11, 4);
  std::size_t i = 0;
  for (const auto& key : enumerate_domain({0, 2})) beta.values.emplace(key, values[i++]);

  std::stringstream buf;
  io::write_coefficients_json(buf, beta);
  const std::string text = buf.str();
  CHECK(text.find("\"M\": null") != std::string::npos);
  CHECK(text.find("\"role\": \"beta\"") != std::string::npos);
  // Enumeration order: (0,0,0) appears before (2,2,2).
  CHECK(text.find("\"k\": 0") < text.find("\"k\": 2"));

  const auto back = io::read_coefficients_json(buf, "mem");
  CHECK(back.grid == beta.grid);
  CHECK(back.role == beta.role);
  CHECK_FALSE(back.M.has_value());
  CHECK(back.values == beta.values);

  CoefficientSet alt{{0.0, 0.0, 3, 2.0}, CoefficientRole::c_alt, 1, {{IndexTriple{-1, -1, -1}, Complex{1e-300, -2.5}}}};
  std::stringstream b2;
  io::write_coefficients_json(b2, alt);
  const auto alt_back = io::read_coefficients_json(b2, "mem");
  CHECK(alt_back.M == 1);
  CHECK(alt_back.values == alt.values);
}

TEST_CASE("coefficient JSON errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_coefficients_json(in, "c.json");
  };
  try {
    parse("{\n\"N\": 3,\n\"a\": ,\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse(R"({"N":3,"a":0,"b":0,"T":1,"role":"beta"})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"N":3,"a":0,"b":0,"T":1,"role":"delta","coeffs":[]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"N":"3","a":0,"b":0,"T":1,"role":"beta","coeffs":[]})"), ParseError);
  CHECK_THROWS_AS(
      parse(R"({"N":3,"a":0,"b":0,"T":1,"role":"beta","coeffs":[{"k":0,"l":0,"m":0,"re":1,"im":0},{"k":0,"l":0,"m":0,"re":1,"im":0}]})"),
      DimensionError);
}

TEST_CASE("slice and report output") {
  const std::vector<double> xs = {0.0, 0.5}, ys = {0.25};
  const std::vector<Complex> vals = {{1, 0}, {0.5, -1}};
  std::ostringstream os;
  io::write_slice_csv(os, xs, ys, vals);
  CHECK(os.str() == "x,y,re,im\n0,0.25,1,0\n0.5,0.25,0.5,-1\n");
  CHECK_THROWS_AS(io::write_slice_csv(os, xs, xs, vals), DimensionError);

  verify::Report report{{{"a", 1e-15, 1e-12, true}, {"b", 2.0, 1.0, false}}};
  std::ostringstream rj;
  io::write_report_json(rj, report, 42);
  CHECK(rj.str().find("\"all_passed\": false") != std::string::npos);
  CHECK(rj.str().find("\"seed\": 42") != std::string::npos);
}
