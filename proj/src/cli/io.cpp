#include "swcwt/cli/io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swcwt::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

// strtod rather than stod: subnormal values are valid output and must read back
double parse_double(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
    throw std::invalid_argument("malformed number: " + text);
  return v;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  const int v = std::stoi(text, &used);
  if (used != text.size()) throw std::invalid_argument("malformed integer: " + text);
  return v;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

bool same_angle(double a, double b) {
  const double d = std::abs(a - b);
  return d <= 1e-12 || std::abs(d - kTwoPi) <= 1e-12;
}

}  // namespace

void write_coefficients(std::ostream& os, const SpinField& field) {
  ordered_json doc;
  doc["version"] = kCoefficientFileVersion;
  doc["spin"] = field.spin();
  doc["lmax"] = field.lmax();
  ordered_json records = ordered_json::array();
  for (int l = field.lmin(); l <= field.lmax(); ++l)
    for (int m = -l; m <= l; ++m) {
      ordered_json r;
      r["l"] = l;
      r["m"] = m;
      r["re"] = field(l, m).real();
      r["im"] = field(l, m).imag();
      records.push_back(std::move(r));
    }
  doc["coeffs"] = std::move(records);
  os << doc.dump(1) << '\n';
}

SpinField read_coefficients(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
    if (doc.at("version").get<int>() != kCoefficientFileVersion)
      throw std::invalid_argument("coefficient file: unsupported version");
    const int spin = doc.at("spin").get<int>();
    const int lmax = doc.at("lmax").get<int>();
    SpinField field(spin, lmax);
    const auto& records = doc.at("coeffs");
    if (!records.is_array() || records.size() != field.size())
      throw std::invalid_argument("coefficient file: record count must be (lmax+1)^2 - spin^2");
    std::vector<bool> seen(field.size(), false);
    for (const auto& r : records) {
      const int l = r.at("l").get<int>();
      const int m = r.at("m").get<int>();
      if (l < field.lmin() || l > lmax || std::abs(m) > l)
        throw std::invalid_argument("coefficient file: (l, m) out of range");
      const std::size_t idx = field.index(l, m);
      if (seen[idx]) throw std::invalid_argument("coefficient file: duplicated (l, m)");
      seen[idx] = true;
      field(l, m) = {r.at("re").get<double>(), r.at("im").get<double>()};
    }
    return field;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("coefficient file: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("coefficient file: ") + e.what());
  }
}

void write_grid_csv(std::ostream& os, const GridField& field) {
  os << "theta,phi,re,im\n";
  for (int i = 0; i < field.grid.n_theta(); ++i)
    for (int j = 0; j < field.grid.n_phi(); ++j) {
      const Complex v = field.at(i, j);
      fmt::print(os, "{:.17g},{:.17g},{:.17g},{:.17g}\n", field.grid.theta(i), field.grid.phi(j), v.real(), v.imag());
    }
}

std::string format_wavelet_header(const WaveletCoefficients& w) {
  return fmt::format("# scales={:.17g},{};so3={},{},{};alpha={}", w.scales.cutoff(), w.scales.size(),
                     w.rotations.n_alpha(), w.rotations.n_beta(), w.rotations.n_gamma(), w.scales.weight_name());
}

WaveletCsvHeader parse_wavelet_header(const std::string& line) {
  if (line.rfind("# ", 0) != 0) throw std::invalid_argument("wavelet csv: missing header line");
  WaveletCsvHeader h;
  bool have_scales = false, have_so3 = false, have_alpha = false;
  try {
    for (const std::string& field : split(line.substr(2), ';')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("wavelet csv: malformed header field");
      const std::string key = field.substr(0, eq);
      const std::vector<std::string> values = split(field.substr(eq + 1), ',');
      if (key == "scales" && values.size() == 2) {
        h.cutoff = parse_double(values[0]);
        h.n_scales = parse_int(values[1]);
        have_scales = true;
      } else if (key == "so3" && values.size() == 3) {
        h.n_alpha = parse_int(values[0]);
        h.n_beta = parse_int(values[1]);
        h.n_gamma = parse_int(values[2]);
        have_so3 = true;
      } else if (key == "alpha" && values.size() == 1) {
        h.weight_name = values[0];
        have_alpha = true;
      } else {
        throw std::invalid_argument("wavelet csv: unknown header field " + key);
      }
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("wavelet csv: header value out of range");
  }
  if (!(have_scales && have_so3 && have_alpha)) throw std::invalid_argument("wavelet csv: incomplete header");
  return h;
}

void write_wavelet_csv(std::ostream& os, const WaveletCoefficients& w) {
  os << format_wavelet_header(w) << '\n' << "rho,alpha,beta,gamma,re,im\n";
  for (int is = 0; is < w.scales.size(); ++is)
    for (std::size_t n = 0; n < w.rotations.size(); ++n) {
      const EulerAngles r = w.rotations.node(n);
      const Complex v = w.at(is, n);
      fmt::print(os, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", w.scales.rho(is), r.alpha, r.beta,
                 r.gamma, v.real(), v.imag());
    }
}

WaveletCsv read_wavelet_csv(std::istream& is) {
  WaveletCsv csv;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("wavelet csv: empty input");
  csv.header = parse_wavelet_header(line);
  if (!std::getline(is, line) || line != "rho,alpha,beta,gamma,re,im")
    throw std::invalid_argument("wavelet csv: missing column line");
  try {
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      const std::vector<std::string> cols = split(line, ',');
      if (cols.size() != 6) throw std::invalid_argument("wavelet csv: expected 6 columns");
      csv.rows.push_back({parse_double(cols[0]), parse_double(cols[1]), parse_double(cols[2]),
                          parse_double(cols[3]), {parse_double(cols[4]), parse_double(cols[5])}});
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("wavelet csv: value out of range");
  }
  return csv;
}

WaveletCoefficients to_coefficients(const WaveletCsv& csv, int spin, int lmax, const ScaleGrid& scales,
                                    const SO3Grid& rotations) {
  const WaveletCsvHeader& h = csv.header;
  if (!close(h.cutoff, scales.cutoff()) || h.n_scales != scales.size() || h.n_alpha != rotations.n_alpha() ||
      h.n_beta != rotations.n_beta() || h.n_gamma != rotations.n_gamma() || h.weight_name != scales.weight_name())
    throw std::invalid_argument("wavelet csv: grids in header do not match the configuration");
  WaveletCoefficients w(spin, lmax, scales, rotations);
  if (csv.rows.size() != w.values.size()) throw std::invalid_argument("wavelet csv: row count does not match grids");
  for (int is = 0; is < scales.size(); ++is)
    for (std::size_t n = 0; n < rotations.size(); ++n) {
      const WaveletCsvRow& row = csv.rows[w.index(is, n)];
      const EulerAngles r = rotations.node(n);
      if (!close(row.rho, scales.rho(is)) || !same_angle(row.alpha, r.alpha) || !close(row.beta, r.beta) ||
          !same_angle(row.gamma, r.gamma))
        throw std::invalid_argument("wavelet csv: row does not match the grid node");
      w.at(is, n) = row.value;
    }
  return w;
}

}  // namespace swcwt::cli
