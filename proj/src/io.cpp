#include "altexp/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "altexp/errors.hpp"
#include "altexp/index_domain.hpp"

namespace altexp::io {

namespace {

using nlohmann::json;

struct SampleRow {
  IndexTriple index;
  Complex value;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto& f : out) {
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

// Reads "r,s,t,re,im" rows after the header.
std::vector<SampleRow> read_rows(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::vector<SampleRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = split_fields(line);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (fields.size() != 5 || fields[0] != "r" || fields[1] != "s" || fields[2] != "t" || fields[3] != "re" ||
          fields[4] != "im")
        throw ParseError(source, lineno, "expected header r,s,t,re,im");
      continue;
    }
    if (fields.size() != 5) throw ParseError(source, lineno, "expected 5 fields, found " + std::to_string(fields.size()));
    SampleRow row;
    double re = 0, im = 0;
    if (!parse_number(fields[0], row.index.k) || !parse_number(fields[1], row.index.l) ||
        !parse_number(fields[2], row.index.m))
      throw ParseError(source, lineno, "grid index must be an integer");
    if (!parse_number(fields[3], re) || !parse_number(fields[4], im))
      throw ParseError(source, lineno, "sample value must be a number");
    row.value = {re, im};
    rows.push_back(row);
  }
  if (in.bad()) throw IoError(source, "read failed");
  if (!header_seen) throw ParseError(source, lineno + 1, "missing header r,s,t,re,im");
  return rows;
}

int infer_N(const std::vector<SampleRow>& rows, const std::string& source, std::optional<int> expected) {
  int top = -1;
  for (const auto& r : rows) {
    if (r.index.k < 0 || r.index.l < 0 || r.index.m < 0)
      throw DimensionError(source + ": negative grid index in samples");
    top = std::max({top, r.index.k, r.index.l, r.index.m});
  }
  const int N = top + 1;
  if (N < 1) throw DimensionError(source + ": no samples");
  if (expected && *expected != N) {
    std::ostringstream os;
    os << source << ": samples span N = " << N << ", expected N = " << *expected;
    throw DimensionError(os.str());
  }
  return N;
}

void write_value_row(std::ostream& out, const IndexTriple& idx, Complex v) {
  out << idx.k << ',' << idx.l << ',' << idx.m << ',' << format_double(v.real()) << ',' << format_double(v.imag())
      << '\n';
}

template <typename T>
T field(const json& obj, const char* name, const std::string& source) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(source, 1, std::string("missing field \"") + name + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(source, 1, std::string("field \"") + name + "\" has the wrong type");
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_grid_csv(std::ostream& out, const GridSpec& grid) {
  out << "r,s,t,x,y,z\n";
  for (const auto& gp : grid_points(grid))
    out << gp.index.k << ',' << gp.index.l << ',' << gp.index.m << ',' << format_double(gp.point.x) << ','
        << format_double(gp.point.y) << ',' << format_double(gp.point.z) << '\n';
}

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
  out << "r,s,t,re,im\n";
  for (const auto& [idx, v] : samples.values) write_value_row(out, idx, v);
}

void write_cube_samples_csv(std::ostream& out, const CubeSampleSet& samples) {
  out << "r,s,t,re,im\n";
  const int N = samples.grid.N;
  std::size_t at = 0;
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      for (int t = 0; t < N; ++t) write_value_row(out, {r, s, t}, samples.values[at++]);
}

SampleSet read_samples_csv(std::istream& in, const std::string& source, GridSpec grid, std::optional<int> expected_N) {
  const auto rows = read_rows(in, source);
  grid.N = infer_N(rows, source, expected_N);
  grid.validate();
  SampleSet out{grid, {}};
  for (const auto& row : rows) {
    if (!is_semidominant(row.index)) {
      std::ostringstream os;
      os << source << ": index " << row.index << " lies outside the fundamental grid";
      throw DimensionError(os.str());
    }
    if (!out.values.emplace(row.index, row.value).second) {
      std::ostringstream os;
      os << source << ": duplicate index " << row.index;
      throw DimensionError(os.str());
    }
  }
  return out;
}

CubeSampleSet read_cube_samples_csv(std::istream& in, const std::string& source, GridSpec grid,
                                    std::optional<int> expected_N) {
  const auto rows = read_rows(in, source);
  grid.N = infer_N(rows, source, expected_N);
  grid.validate();
  const auto n = static_cast<std::size_t>(grid.N);
  CubeSampleSet out{grid, std::vector<Complex>(n * n * n)};
  std::vector<bool> filled(n * n * n, false);
  for (const auto& row : rows) {
    const auto at = (static_cast<std::size_t>(row.index.k) * n + static_cast<std::size_t>(row.index.l)) * n +
                    static_cast<std::size_t>(row.index.m);
    if (filled[at]) {
      std::ostringstream os;
      os << source << ": duplicate index " << row.index;
      throw DimensionError(os.str());
    }
    filled[at] = true;
    out.values[at] = row.value;
  }
  for (std::size_t at = 0; at < filled.size(); ++at)
    if (!filled[at])
      throw MissingEntryError("sample", {static_cast<int>(at / (n * n)), static_cast<int>(at / n % n),
                                         static_cast<int>(at % n)});
  return out;
}

void write_coefficients_json(std::ostream& out, const CoefficientSet& coeffs) {
  json doc;
  doc["N"] = coeffs.grid.N;
  doc["M"] = coeffs.M ? json(*coeffs.M) : json(nullptr);
  doc["a"] = coeffs.grid.a;
  doc["b"] = coeffs.grid.b;
  doc["T"] = coeffs.grid.T;
  doc["role"] = std::string(to_string(coeffs.role));
  json list = json::array();
  for (const auto& [key, v] : coeffs.values)
    list.push_back({{"k", key.k}, {"l", key.l}, {"m", key.m}, {"re", v.real()}, {"im", v.imag()}});
  doc["coeffs"] = std::move(list);
  out << doc.dump(1) << '\n';
}

CoefficientSet read_coefficients_json(std::istream& in, const std::string& source) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError(source, "read failed");
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw ParseError(source, line, e.what());
  }
  if (!doc.is_object()) throw ParseError(source, 1, "expected a JSON object");

  CoefficientSet out;
  out.grid.N = field<int>(doc, "N", source);
  out.grid.a = field<double>(doc, "a", source);
  out.grid.b = field<double>(doc, "b", source);
  out.grid.T = field<double>(doc, "T", source);
  try {
    out.role = role_from_string(field<std::string>(doc, "role", source));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 1, e.what());
  }
  if (doc.contains("M") && !doc["M"].is_null()) out.M = field<int>(doc, "M", source);
  out.grid.validate();

  const auto it = doc.find("coeffs");
  if (it == doc.end() || !it->is_array()) throw ParseError(source, 1, "missing array \"coeffs\"");
  for (const auto& entry : *it) {
    if (!entry.is_object()) throw ParseError(source, 1, "coefficient entries must be objects");
    const IndexTriple key{field<int>(entry, "k", source), field<int>(entry, "l", source), field<int>(entry, "m", source)};
    const Complex value{field<double>(entry, "re", source), field<double>(entry, "im", source)};
    if (!out.values.emplace(key, value).second) {
      std::ostringstream os;
      os << source << ": duplicate coefficient " << key;
      throw DimensionError(os.str());
    }
  }
  return out;
}

void write_slice_csv(std::ostream& out, std::span<const double> xs, std::span<const double> ys,
                     std::span<const Complex> values) {
  if (values.size() != xs.size() * ys.size()) throw DimensionError("slice value count must equal |xs| * |ys|");
  out << "x,y,re,im\n";
  std::size_t at = 0;
  for (const double x : xs)
    for (const double y : ys) {
      const Complex v = values[at++];
      out << format_double(x) << ',' << format_double(y) << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << '\n';
    }
}

void write_report_json(std::ostream& out, const verify::Report& report, std::uint64_t seed) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"max_residual", c.max_residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  json doc{{"seed", seed}, {"all_passed", report.all_passed()}, {"checks", std::move(checks)}};
  out << doc.dump(1) << '\n';
}

}  // namespace altexp::io
