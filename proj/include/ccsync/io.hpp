#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ccsync/dynsys.hpp"

namespace ccsync {

/// Write `content` to `path` atomically (temp file in the same directory + rename).
void atomic_write(const std::string& path, const std::string& content);

/// CSV: comma separated, one header row, LF endings, '.' decimal separator,
/// 6 significant digits.
std::string csv_encode(const std::vector<std::string>& header, const Matrix& values);

struct CsvData {
    std::vector<std::string> header;
    Matrix values;
};

CsvData read_csv(const std::string& path);

std::string trajectory_to_csv(const Trajectory& traj);
Trajectory trajectory_from_csv(const std::string& path, double dt = 1.0);

}  // namespace ccsync
