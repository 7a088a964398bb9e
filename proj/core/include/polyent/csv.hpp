#pragma once

#include <string>
#include <vector>

#include "polyent/experiment.hpp"

namespace polyent {

/// CSV with the fixed header
/// system,mode,n_fold,m,epsilon,time_depth,separated,covering,slope,residual
/// Reals carry 6 significant digits; UTF-8, LF line endings.
std::string emit_csv(const std::vector<ResultRow>& rows);

std::vector<ResultRow> parse_csv(const std::string& text);

void write_csv_file(const std::string& path, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_csv_file(const std::string& path);

/// Human-readable table of the same rows (the `report` subcommand).
std::string format_table(const std::vector<ResultRow>& rows);

}  // namespace polyent
