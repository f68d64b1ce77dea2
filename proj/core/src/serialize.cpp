#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <system_error>

#include "gqd/errors.hpp"
#include "gqd/sweep.hpp"

namespace gqd {

namespace {

using ojson = nlohmann::ordered_json;

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> csv_rows;
  ojson json_rows = ojson::array();
};

ojson json_doc(const Table& t, const nlohmann::json& config, std::string_view rows_key) {
  ojson doc;
  doc["config"] = config;
  doc["columns"] = t.columns;
  doc[std::string(rows_key)] = t.json_rows;
  return doc;
}

std::string csv_text(const Table& t, const nlohmann::json& config) {
  std::string out = "# " + config.dump() + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_field(t.columns[i]);
  out += "\n";
  for (const auto& row : t.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

std::string emit(const Table& t, Format format, const nlohmann::json& config, std::string_view rows_key) {
  if (format == Format::JSON) return json_doc(t, config, rows_key).dump(1) + "\n";
  return csv_text(t, config);
}

ojson json_number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }
ojson json_number(const std::optional<double>& v) { return v ? json_number(*v) : ojson(nullptr); }
std::string csv_number(const std::optional<double>& v) { return v ? format_double(*v) : "nan"; }

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw IoError("malformed number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<double> alphas_from_columns(const std::vector<std::string>& cols) {
  if (cols.empty() || cols[0] != "q" || cols.size() % 2 != 1) throw IoError("unexpected curve table header");
  std::vector<double> alphas;
  for (std::size_t i = 1; i < cols.size(); i += 2) {
    const std::string& c = cols[i];
    if (c.rfind("d_l@", 0) != 0 || cols[i + 1] != "d_b@" + c.substr(4)) {
      throw IoError("unexpected curve column '" + c + "'");
    }
    alphas.push_back(parse_double(c.substr(4)));
  }
  return alphas;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string serialize(const CurveTable& table, Format format, const nlohmann::json& config) {
  Table t;
  t.columns.push_back("q");
  for (double a : table.alpha_sq) {
    t.columns.push_back("d_l@" + shortest(a));
    t.columns.push_back("d_b@" + shortest(a));
  }
  for (std::size_t i = 0; i < table.q.size(); ++i) {
    std::vector<std::string> row{format_double(table.q[i])};
    ojson obj;
    obj["q"] = table.q[i];
    for (std::size_t k = 0; k < table.alpha_sq.size(); ++k) {
      row.push_back(format_double(table.d_l[k][i]));
      row.push_back(format_double(table.d_b[k][i]));
      obj[t.columns[1 + 2 * k]] = table.d_l[k][i];
      obj[t.columns[2 + 2 * k]] = table.d_b[k][i];
    }
    t.csv_rows.push_back(std::move(row));
    t.json_rows.push_back(std::move(obj));
  }
  return emit(t, format, config, "rows");
}

std::string serialize(const RegionMap& map, Format format, const nlohmann::json& config) {
  Table t;
  t.columns = {"param", "t", "gamma_sign", "tdd", "hdd", "bdd", "category_tdd", "category_hdd", "category_bdd"};
  for (const FlowCell& c : map.cells) {
    const std::string g(to_string(c.gamma_sign));
    const std::string e[3] = {std::string(to_string(c.of(Measure::TDD))), std::string(to_string(c.of(Measure::HDD))),
                              std::string(to_string(c.of(Measure::BDD)))};
    const std::string cat[3] = {std::string(to_string(category(c, Measure::TDD))),
                                std::string(to_string(category(c, Measure::HDD))),
                                std::string(to_string(category(c, Measure::BDD)))};
    t.csv_rows.push_back({format_double(c.param_value), format_double(c.t), g, e[0], e[1], e[2], cat[0], cat[1], cat[2]});
    ojson obj;
    obj["param"] = c.param_value;
    obj["t"] = c.t;
    obj["gamma_sign"] = g;
    obj["tdd"] = e[0];
    obj["hdd"] = e[1];
    obj["bdd"] = e[2];
    obj["category"] = ojson{{"tdd", cat[0]}, {"hdd", cat[1]}, {"bdd", cat[2]}};
    t.json_rows.push_back(std::move(obj));
  }
  if (format == Format::JSON) {
    ojson doc = json_doc(t, config, "cells");
    doc["failures"] = map.failures;
    return doc.dump(1) + "\n";
  }
  return csv_text(t, config);
}

std::string serialize(const Trajectory& traj, Format format, const nlohmann::json& config) {
  Table t;
  t.columns = {"t", "q", "gamma", "omega", "d_t", "d_l", "d_b"};
  for (const auto& r : traj.rows) {
    t.csv_rows.push_back({format_double(r.t), format_double(r.q), csv_number(r.gamma), csv_number(r.omega),
                          format_double(r.d_t), format_double(r.d_l), format_double(r.d_b)});
    ojson obj;
    obj["t"] = r.t;
    obj["q"] = r.q;
    obj["gamma"] = json_number(r.gamma);
    obj["omega"] = json_number(r.omega);
    obj["d_t"] = r.d_t;
    obj["d_l"] = r.d_l;
    obj["d_b"] = r.d_b;
    t.json_rows.push_back(std::move(obj));
  }
  return emit(t, format, config, "rows");
}

std::string serialize(const std::vector<CheckResult>& checks, Format format, const nlohmann::json& config) {
  Table t;
  t.columns = {"name", "worst", "tolerance", "samples", "passed", "detail"};
  for (const auto& c : checks) {
    t.csv_rows.push_back({csv_field(c.name), format_double(c.worst), format_double(c.tolerance),
                          std::to_string(c.samples), c.passed ? "true" : "false", csv_field(c.detail)});
    ojson obj;
    obj["name"] = c.name;
    obj["worst"] = json_number(c.worst);
    obj["tolerance"] = c.tolerance;
    obj["samples"] = c.samples;
    obj["passed"] = c.passed;
    obj["detail"] = c.detail;
    t.json_rows.push_back(std::move(obj));
  }
  return emit(t, format, config, "rows");
}

CurveTable parse_curve_table(const std::string& text, Format format) {
  CurveTable table;
  std::vector<std::vector<double>> columns;
  if (format == Format::JSON) {
    ojson doc;
    try {
      doc = ojson::parse(text);
    } catch (const std::exception& e) {
      throw IoError(std::string("malformed JSON: ") + e.what());
    }
    const auto names = doc.at("columns").get<std::vector<std::string>>();
    table.alpha_sq = alphas_from_columns(names);
    columns.resize(names.size());
    for (const auto& row : doc.at("rows"))
      for (std::size_t c = 0; c < names.size(); ++c) columns[c].push_back(row.at(names[c]).get<double>());
  } else {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (names.empty()) {
        names = split(line);
        table.alpha_sq = alphas_from_columns(names);
        columns.resize(names.size());
        continue;
      }
      const auto fields = split(line);
      if (fields.size() != names.size()) throw IoError("row width does not match header");
      for (std::size_t c = 0; c < fields.size(); ++c) columns[c].push_back(parse_double(fields[c]));
    }
    if (names.empty()) throw IoError("missing header row");
  }
  table.q = columns[0];
  for (std::size_t k = 0; k < table.alpha_sq.size(); ++k) {
    table.d_l.push_back(columns[1 + 2 * k]);
    table.d_b.push_back(columns[2 + 2 * k]);
  }
  return table;
}

}  // namespace gqd
