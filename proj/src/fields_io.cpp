#include "mdsc/fields_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace mdsc {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_field_csv(std::ostream& os, const ScalarField& field) {
  const int side = field.shape.side();
  if (field.shape.dim() == 2) {
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) {
        if (c) os << ',';
        os << format_double(field.values[static_cast<std::int64_t>(r) * side + c]);
      }
      os << '\n';
    }
    return;
  }
  os << field.shape.dim() << ',' << side << ",order=row-major\n";
  for (std::int64_t i = 0; i < field.shape.size(); ++i)
    os << format_double(field.values[i]) << '\n';
}

void write_field_csv(const std::filesystem::path& path, const ScalarField& field) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_field_csv(os, field);
}

void write_field_pgm(const std::filesystem::path& path, const ScalarField& field) {
  if (field.shape.dim() != 2)
    throw std::invalid_argument("PGM export is defined for D = 2 fields only");
  const int side = field.shape.side();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << "P5\n" << side << ' ' << side << "\n255\n";
  for (std::int64_t i = 0; i < field.shape.size(); ++i) {
    double v = field.values[i];
    v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    os.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * (1.0 - v)))));
  }
}

}  // namespace mdsc
