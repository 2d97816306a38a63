#pragma once

#include <string>

#include <Eigen/Core>

#include "wpb/bicoherent.hpp"

namespace wpb::verify {

/// Writes `re_z,im_z,abs_value` rows, Im z outer and Re z inner, every number
/// with 17 significant digits. Throws std::runtime_error if the file cannot be written.
void write_grid_csv(const std::string& path, const GridSpec& grid, const Eigen::MatrixXd& values);

std::string grid_csv_text(const GridSpec& grid, const Eigen::MatrixXd& values);

}  // namespace wpb::verify
