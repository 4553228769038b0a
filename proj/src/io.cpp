#include "resq/io.hpp"

#include <cstdio>

#include "resq/error.hpp"

namespace resq::io {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_csv(const DenseMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

json matrix_to_json(const DenseMatrix& m, std::string_view kind) {
  json data = json::array();
  for (double v : m.data()) data.push_back(v);
  return {{"n", m.rows()}, {"kind", kind}, {"data", std::move(data)}};
}

DenseMatrix matrix_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  const auto& data = j.at("data");
  if (!data.is_array() || data.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "matrix JSON data length does not equal n*n");
  }
  DenseMatrix m(n);
  for (std::size_t k = 0; k < n * n; ++k) m.data()[k] = data[k].get<double>();
  return m;
}

json spectrum_to_json(const Spectrum& s) {
  json mult = json::array();
  for (const auto& [value, count] : s.multiplicities) mult.push_back(json::array({value, count}));
  return {{"values", s.values}, {"multiplicities", std::move(mult)}, {"tol", s.tol}};
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::string out;
  for (double v : s.values) out += format_double(v) + '\n';
  return out;
}

namespace {

json bounds_to_json(const EnergyBounds& b) {
  return {{"lower_2sqrtF", b.lower_2sqrtF},
          {"upper_sqrt2nF", b.upper_sqrt2nF},
          {"upper_meanU", b.upper_meanU},
          {"upper_eta1", b.upper_eta1}};
}

}  // namespace

json energy_to_json(const EnergyReport& r) {
  const auto& br = r.bounds;
  return {
      {"graph", r.graph_tag},
      {"n", r.n},
      {"transmissions", r.transmissions},
      {"mean_transmission", r.mean_transmission},
      {"rl_spectrum", spectrum_to_json(r.rl_spectrum)},
      {"r_spectrum", spectrum_to_json(r.r_spectrum)},
      {"eta", r.eta},
      {"f", r.f},
      {"F", r.F},
      {"le_r", r.le_r},
      {"e_r", r.e_r},
      {"bounds", bounds_to_json(br.bounds)},
      {"slack", bounds_to_json(br.slack)},
      {"satisfied",
       {{"lower_2sqrtF", br.lower_2sqrtF},
        {"upper_sqrt2nF", br.upper_sqrt2nF},
        {"upper_meanU", br.upper_meanU},
        {"upper_eta1", br.upper_eta1}}},
      {"radicand_clamped", br.clamped},
  };
}

std::string energy_to_csv(const EnergyReport& r) {
  std::string out = "key,value\n";
  auto line = [&out](const std::string& key, const std::string& value) { out += key + ',' + value + '\n'; };
  auto vec = [&](const std::string& key, const std::vector<double>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) line(key + '[' + std::to_string(i) + ']', format_double(xs[i]));
  };
  line("graph", r.graph_tag);
  line("n", std::to_string(r.n));
  vec("transmission", r.transmissions);
  line("mean_transmission", format_double(r.mean_transmission));
  vec("eta", r.eta);
  line("f", format_double(r.f));
  line("F", format_double(r.F));
  line("le_r", format_double(r.le_r));
  line("e_r", format_double(r.e_r));
  const auto& b = r.bounds;
  line("lower_2sqrtF", format_double(b.bounds.lower_2sqrtF));
  line("upper_sqrt2nF", format_double(b.bounds.upper_sqrt2nF));
  line("upper_meanU", format_double(b.bounds.upper_meanU));
  line("upper_eta1", format_double(b.bounds.upper_eta1));
  line("all_bounds_satisfied", b.all_satisfied() ? "true" : "false");
  return out;
}

json closed_form_to_json(const closed_forms::ClosedForm& cf) {
  return {
      {"family", cf.family.tag()},
      {"n", cf.family.order()},
      {"rl", matrix_to_json(cf.rl_matrix, "rl")},
      {"rq", matrix_to_json(cf.rq_matrix, "rq")},
      {"rl_spectrum", spectrum_to_json(cf.rl_spectrum)},
      {"rq_spectrum", spectrum_to_json(cf.rq_spectrum)},
  };
}

}  // namespace resq::io
