#include "lsr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lsr/error.hpp"

namespace lsr::io {

namespace {

template <typename T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::ConfigError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const DiscreteMeasure& mu) {
  json re = json::array(), im = json::array();
  for (const cplx& a : mu.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return json{{"supports", mu.supports()}, {"amplitudes_re", re}, {"amplitudes_im", im}};
}

DiscreteMeasure measure_from_json(const json& j) {
  auto y = required<std::vector<double>>(j, "supports");
  auto re = required<std::vector<double>>(j, "amplitudes_re");
  std::vector<double> im = j.contains("amplitudes_im") ? required<std::vector<double>>(j, "amplitudes_im")
                                                       : std::vector<double>(re.size(), 0.0);
  if (re.size() != im.size()) throw Error(ErrorCode::ConfigError, "amplitude parts differ in length");
  CVector a(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) a[k] = cplx(re[k], im[k]);
  return DiscreteMeasure(std::move(y), std::move(a));
}

json to_json(const Measurement& y) {
  json re = json::array(), im = json::array();
  for (const cplx& v : y.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  json out{{"omega", y.grid.omega()}, {"m", y.grid.m()}, {"sigma", y.sigma}, {"seed", nullptr},
           {"values_re", re}, {"values_im", im}};
  if (y.noise_seed) out["seed"] = *y.noise_seed;
  return out;
}

Measurement measurement_from_json(const json& j) {
  const double omega = required<double>(j, "omega");
  const int m = required<int>(j, "m");
  const double sigma = required<double>(j, "sigma");
  auto re = required<std::vector<double>>(j, "values_re");
  auto im = required<std::vector<double>>(j, "values_im");
  if (re.size() != im.size()) throw Error(ErrorCode::ConfigError, "value parts differ in length");
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j.at("seed").is_null()) seed = required<std::uint64_t>(j, "seed");
  CVector v(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) v[k] = cplx(re[k], im[k]);
  return Measurement(std::move(v), SamplingGrid(omega, m), sigma, seed);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::IoError, "cannot parse " + path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename onto " + path.string());
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace lsr::io
