#include "wpb/verify/grid_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace wpb::verify {
namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.17g", v);
  out += buf;
}

}  // namespace

std::string grid_csv_text(const GridSpec& grid, const Eigen::MatrixXd& values) {
  if (values.rows() != grid.n_im || values.cols() != grid.n_re)
    throw std::invalid_argument("grid values do not match the grid dimensions");
  std::string out = "re_z,im_z,abs_value\n";
  out.reserve(out.size() + static_cast<std::size_t>(values.size()) * 72);
  for (unsigned j = 0; j < grid.n_im; ++j) {
    for (unsigned i = 0; i < grid.n_re; ++i) {
      append_number(out, grid.re(i));
      out += ',';
      append_number(out, grid.im(j));
      out += ',';
      append_number(out, values(j, i));
      out += '\n';
    }
  }
  return out;
}

void write_grid_csv(const std::string& path, const GridSpec& grid, const Eigen::MatrixXd& values) {
  const std::string text = grid_csv_text(grid, values);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << text;
  os.close();
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace wpb::verify
