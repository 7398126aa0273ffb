#pragma once

// CSV/JSON serialization for fields, profiles, and reports. Output is a pure
// function of the data: fixed column order, fixed key order, 17 significant
// digits via to_chars (locale-free, round-trip exact for 64-bit doubles).

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "covosc/analysis.hpp"
#include "covosc/errors.hpp"
#include "covosc/numerics.hpp"

namespace covosc {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw io_error("cannot parse number '" + std::string(text) + "'");
  }
  return v;
}

namespace detail {

inline void require_all_finite(const std::vector<double>& values, const char* what) {
  for (const double v : values) {
    if (!std::isfinite(v)) throw invalid_parameter(std::string(what) + " contains non-finite values");
  }
}

inline nlohmann::ordered_json axis_json(const Grid1D& axis) {
  return nlohmann::ordered_json{{"min", axis.min}, {"max", axis.max}, {"count", axis.count}};
}

inline Grid1D axis_from_json(const nlohmann::ordered_json& j) {
  Grid1D axis{j.at("min").get<double>(), j.at("max").get<double>(), j.at("count").get<int>()};
  validate_grid(axis);
  return axis;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

}  // namespace detail

// rows in row-major grid order, z slow
inline void write_field_csv(const SampledField& field, std::ostream& out) {
  validate_field(field);
  detail::require_all_finite(field.values, "field");
  out << "z,t,value\n";
  for (int i = 0; i < field.grid.axis_z.count; ++i) {
    const std::string z = format_double(field.grid.axis_z.node(i));
    for (int j = 0; j < field.grid.axis_t.count; ++j) {
      out << z << ',' << format_double(field.grid.axis_t.node(j)) << ','
          << format_double(field.value_at(i, j)) << '\n';
    }
  }
}

inline SampledField read_field_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "z,t,value") {
    throw io_error("field CSV must start with header 'z,t,value'");
  }
  std::vector<double> zs, ts, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != 3) throw io_error("field CSV row needs 3 columns: '" + line + "'");
    zs.push_back(parse_double(cells[0]));
    ts.push_back(parse_double(cells[1]));
    vs.push_back(parse_double(cells[2]));
  }
  if (vs.empty()) throw io_error("field CSV has no data rows");
  std::size_t count_t = 1;
  while (count_t < zs.size() && zs[count_t] == zs[0]) ++count_t;
  if (zs.size() % count_t != 0) throw io_error("field CSV rows do not form a full grid");
  const std::size_t count_z = zs.size() / count_t;
  SampledField field{Grid2D{Grid1D{zs.front(), zs.back(), static_cast<int>(count_z)},
                            Grid1D{ts.front(), ts[count_t - 1], static_cast<int>(count_t)}},
                     std::move(vs)};
  validate_field(field);
  return field;
}

inline void write_field_json(const SampledField& field, std::ostream& out) {
  validate_field(field);
  detail::require_all_finite(field.values, "field");
  nlohmann::ordered_json j{
      {"grid", {{"axis_z", detail::axis_json(field.grid.axis_z)},
                {"axis_t", detail::axis_json(field.grid.axis_t)}}},
      {"values", field.values}};
  out << j.dump(2) << '\n';
}

inline SampledField read_field_json(std::istream& in) {
  const auto j = nlohmann::ordered_json::parse(in);
  SampledField field{Grid2D{detail::axis_from_json(j.at("grid").at("axis_z")),
                            detail::axis_from_json(j.at("grid").at("axis_t"))},
                     j.at("values").get<std::vector<double>>()};
  validate_field(field);
  return field;
}

// marginal density over z or q_z; the README documents which one per command
inline void write_profile_csv(const DensityProfile& profile, std::ostream& out) {
  detail::require_all_finite(profile.values, "profile");
  out << "coordinate,value\n";
  for (int i = 0; i < profile.axis.count; ++i) {
    out << format_double(profile.axis.node(i)) << ','
        << format_double(profile.values[static_cast<std::size_t>(i)]) << '\n';
  }
}

inline DensityProfile read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "coordinate,value") {
    throw io_error("profile CSV must start with header 'coordinate,value'");
  }
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != 2) throw io_error("profile CSV row needs 2 columns: '" + line + "'");
    xs.push_back(parse_double(cells[0]));
    vs.push_back(parse_double(cells[1]));
  }
  if (vs.size() < 3) throw io_error("profile CSV has too few rows");
  DensityProfile profile{Grid1D{xs.front(), xs.back(), static_cast<int>(xs.size())},
                         std::move(vs)};
  validate_grid(profile.axis);
  return profile;
}

inline void write_profile_json(const DensityProfile& profile, std::ostream& out) {
  detail::require_all_finite(profile.values, "profile");
  nlohmann::ordered_json j{{"axis", detail::axis_json(profile.axis)},
                           {"values", profile.values}};
  out << j.dump(2) << '\n';
}

inline void write_moments_csv(const MomentReport& r, std::ostream& out) {
  out << "key,value\n";
  out << "eta," << format_double(r.eta) << '\n';
  out << "n," << r.n << '\n';
  out << "z2," << format_double(r.z2) << '\n';
  out << "qz2," << format_double(r.qz2) << '\n';
  out << "u2," << format_double(r.u2) << '\n';
  out << "v2," << format_double(r.v2) << '\n';
  out << "qu2," << format_double(r.qu2) << '\n';
  out << "qv2," << format_double(r.qv2) << '\n';
  out << "product_zq," << format_double(r.product_zq) << '\n';
  out << "product_uqu," << format_double(r.product_uqu) << '\n';
  out << "product_vqv," << format_double(r.product_vqv) << '\n';
}

inline void write_moments_json(const MomentReport& r, std::ostream& out) {
  nlohmann::ordered_json j{{"eta", r.eta},
                           {"n", r.n},
                           {"z2", r.z2},
                           {"qz2", r.qz2},
                           {"u2", r.u2},
                           {"v2", r.v2},
                           {"qu2", r.qu2},
                           {"qv2", r.qv2},
                           {"product_zq", r.product_zq},
                           {"product_uqu", r.product_uqu},
                           {"product_vqv", r.product_vqv}};
  out << j.dump(2) << '\n';
}

inline void write_coherence_csv(const CoherenceReport& r, std::ostream& out) {
  out << "key,value\n";
  out << "energy_gev," << format_double(r.energy_gev) << '\n';
  out << "mass_gev," << format_double(r.mass_gev) << '\n';
  out << "eta," << format_double(r.eta) << '\n';
  out << "period_dilation," << format_double(r.period_dilation) << '\n';
  out << "interaction_contraction," << format_double(r.interaction_contraction) << '\n';
  out << "ratio," << format_double(r.ratio) << '\n';
}

inline void write_coherence_json(const CoherenceReport& r, std::ostream& out) {
  nlohmann::ordered_json j{{"energy_gev", r.energy_gev},
                           {"mass_gev", r.mass_gev},
                           {"eta", r.eta},
                           {"period_dilation", r.period_dilation},
                           {"interaction_contraction", r.interaction_contraction},
                           {"ratio", r.ratio}};
  out << j.dump(2) << '\n';
}

}  // namespace covosc
