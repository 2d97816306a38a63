#include "wpb/verify/heatmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#ifdef WPB_HAVE_PNG
#include <png.h>
#endif

namespace wpb::verify {
namespace {

// Piecewise-linear dark blue -> teal -> yellow ramp.
std::array<unsigned char, 3> colormap(double t) {
  static constexpr double stops[][3] = {
      {0.05, 0.03, 0.25}, {0.15, 0.30, 0.55}, {0.12, 0.60, 0.55}, {0.55, 0.80, 0.30}, {0.99, 0.91, 0.15}};
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0) * 4.0;
  const int k = std::min(static_cast<int>(t), 3);
  const double u = t - k;
  std::array<unsigned char, 3> rgb{};
  for (int c = 0; c < 3; ++c)
    rgb[c] = static_cast<unsigned char>(std::lround(255.0 * ((1.0 - u) * stops[k][c] + u * stops[k + 1][c])));
  return rgb;
}

}  // namespace

#ifdef WPB_HAVE_PNG

bool heatmap_available() noexcept { return true; }

void write_heatmap_png(const std::string& path, const Eigen::MatrixXd& values, unsigned scale) {
  if (values.size() == 0) throw std::invalid_argument("empty heat map");
  scale = std::max(scale, 1u);
  const double peak = values.maxCoeff();
  const auto width = static_cast<png_uint_32>(values.cols() * scale);
  const auto height = static_cast<png_uint_32>(values.rows() * scale);

  std::vector<unsigned char> pixels(static_cast<std::size_t>(width) * height * 3);
  for (png_uint_32 y = 0; y < height; ++y) {
    const Eigen::Index row = values.rows() - 1 - y / scale;
    for (png_uint_32 x = 0; x < width; ++x) {
      const double v = values(row, x / scale);
      const auto rgb = colormap(peak > 0.0 ? v / peak : 0.0);
      std::copy(rgb.begin(), rgb.end(), pixels.begin() + (static_cast<std::size_t>(y) * width + x) * 3);
    }
  }

  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open '" + path + "' for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("libpng failed writing '" + path + "'");
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (png_uint_32 y = 0; y < height; ++y) png_write_row(png, pixels.data() + static_cast<std::size_t>(y) * width * 3);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  if (std::fclose(fp) != 0) throw std::runtime_error("failed closing '" + path + "'");
}

#else

bool heatmap_available() noexcept { return false; }

void write_heatmap_png(const std::string&, const Eigen::MatrixXd&, unsigned) {
  throw std::runtime_error("this build has no PNG backend");
}

#endif

}  // namespace wpb::verify
