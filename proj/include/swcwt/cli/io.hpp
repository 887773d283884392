#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swcwt/swsh.hpp"
#include "swcwt/wavelet.hpp"

namespace swcwt::cli {

inline constexpr int kCoefficientFileVersion = 1;

/// {"version":1,"spin":s,"lmax":L,"coeffs":[{"l":l,"m":m,"re":x,"im":y},...]}, l-major.
void write_coefficients(std::ostream& os, const SpinField& field);

/// Throws std::invalid_argument on malformed files: wrong version, bad
/// ranges, wrong record count, duplicated or missing (l, m).
SpinField read_coefficients(std::istream& is);

/// "theta,phi,re,im" rows in grid order.
void write_grid_csv(std::ostream& os, const GridField& field);

struct WaveletCsvHeader {
  double cutoff = 0.0;
  int n_scales = 0;
  int n_alpha = 0;
  int n_beta = 0;
  int n_gamma = 0;
  std::string weight_name;
};

/// "# scales=<R>,<n>;so3=<na>,<nb>,<ng>;alpha=<weight>"
std::string format_wavelet_header(const WaveletCoefficients& w);
WaveletCsvHeader parse_wavelet_header(const std::string& line);

/// Header line, then "rho,alpha,beta,gamma,re,im" rows, scale-major.
void write_wavelet_csv(std::ostream& os, const WaveletCoefficients& w);

struct WaveletCsvRow {
  double rho, alpha, beta, gamma;
  Complex value;
};

struct WaveletCsv {
  WaveletCsvHeader header;
  std::vector<WaveletCsvRow> rows;
};

WaveletCsv read_wavelet_csv(std::istream& is);

/// Rebuilds transform values on the given grids. Throws std::invalid_argument
/// when the header or any row disagrees with them.
WaveletCoefficients to_coefficients(const WaveletCsv& csv, int spin, int lmax, const ScaleGrid& scales,
                                    const SO3Grid& rotations);

}  // namespace swcwt::cli
