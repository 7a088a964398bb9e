#include "polyent/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

constexpr const char* kHeader =
    "system,mode,n_fold,m,epsilon,time_depth,separated,covering,slope,"
    "residual";

std::string real6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string emit_csv(const std::vector<ResultRow>& rows) {
  std::string out = kHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.system;
    out += ',';
    out += r.mode;
    out += ',';
    if (r.n_fold > 0) out += std::to_string(r.n_fold);
    out += ',';
    if (r.m > 0) out += std::to_string(r.m);
    out += ',';
    if (r.epsilon > 0.0) out += real6(r.epsilon);
    out += ',';
    if (r.time_depth > 0) out += std::to_string(r.time_depth);
    out += ',';
    if (r.separated >= 0) out += std::to_string(r.separated);
    out += ',';
    if (r.covering >= 0) out += std::to_string(r.covering);
    out += ',';
    if (r.has_slope) {
      out += real6(r.slope);
      out += ',';
      out += real6(r.residual);
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

std::vector<ResultRow> parse_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line) || line != kHeader)
    throw input_error("CSV header does not match the report schema");
  std::vector<ResultRow> rows;
  int lineno = 1;
  while (std::getline(ss, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 10)
      throw input_error("CSV line " + std::to_string(lineno) +
                        ": expected 10 fields, got " +
                        std::to_string(f.size()));
    ResultRow r;
    try {
      r.system = f[0];
      r.mode = f[1];
      r.n_fold = f[2].empty() ? 0 : std::stoi(f[2]);
      r.m = f[3].empty() ? 0 : std::stoi(f[3]);
      r.epsilon = f[4].empty() ? 0.0 : std::stod(f[4]);
      r.time_depth = f[5].empty() ? 0 : std::stoi(f[5]);
      r.separated = f[6].empty() ? -1 : std::stol(f[6]);
      r.covering = f[7].empty() ? -1 : std::stol(f[7]);
      r.has_slope = !f[8].empty();
      r.slope = r.has_slope ? std::stod(f[8]) : 0.0;
      r.residual = f[9].empty() ? 0.0 : std::stod(f[9]);
    } catch (const std::exception&) {
      throw input_error("CSV line " + std::to_string(lineno) +
                        ": malformed field");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_csv_file(const std::string& path,
                    const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw std::runtime_error("cannot write CSV to '" + path + "'");
  out << emit_csv(rows);
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

std::vector<ResultRow> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open CSV '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

std::string format_table(const std::vector<ResultRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"system", "mode", "n", "m", "eps", "depth", "sep", "cov",
                   "slope", "resid"});
  for (const auto& r : rows) {
    cells.push_back({r.system, r.mode,
                     r.n_fold > 0 ? std::to_string(r.n_fold) : "",
                     r.m > 0 ? std::to_string(r.m) : "",
                     r.epsilon > 0.0 ? real6(r.epsilon) : "",
                     r.time_depth > 0 ? std::to_string(r.time_depth) : "",
                     r.separated >= 0 ? std::to_string(r.separated) : "",
                     r.covering >= 0 ? std::to_string(r.covering) : "",
                     r.has_slope ? real6(r.slope) : "",
                     r.has_slope ? real6(r.residual) : ""});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += row[c];
      out.append(width[c] - row[c].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace polyent
