#pragma once

#include <string>

#include <Eigen/Core>

namespace wpb::verify {

/// False when the build has no PNG backend; write_heatmap_png then throws.
bool heatmap_available() noexcept;

/// Renders values (row 0 = smallest Im z) as an RGB PNG with the largest Im z at
/// the top, each pixel block `scale` wide. Colors are normalized to the panel's
/// own maximum.
void write_heatmap_png(const std::string& path, const Eigen::MatrixXd& values, unsigned scale = 4);

}  // namespace wpb::verify
