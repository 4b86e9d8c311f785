#include "tfa/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tfa/error.hpp"

namespace tfa::io {

using nlohmann::json;

namespace {

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + p.string());
  return out;
}

std::ifstream open_in(const fs::path& p) {
  if (!fs::exists(p)) throw Error(ErrorCode::io, "missing file " + p.string());
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read " + p.string());
  return in;
}

json read_json(const fs::path& p) {
  std::ifstream in = open_in(p);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, p.string() + ": " + e.what());
  }
}

void write_json(const fs::path& p, const json& j) {
  std::ofstream out = open_out(p);
  out << j.dump(2) << '\n';
}

template <class T>
T get(const json& j, const char* key, const fs::path& p) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::parse, p.string() + ": missing or invalid key '" + key + "'");
  }
}

json grid_json(const GridSpec& g) { return {{"d", g.d}, {"m", g.m}, {"L", g.L}}; }

GridSpec grid_from(const json& j, const fs::path& p) {
  return make_grid(get<int>(j, "d", p), get<int>(j, "m", p), get<int>(j, "L", p));
}

json axis_json(const Axis& a) { return {{"n", a.n}, {"start", a.start}, {"step", a.step}}; }

Axis axis_from(const json& j, const fs::path& p) {
  return {get<int>(j, "n", p), get<double>(j, "start", p), get<double>(j, "step", p)};
}

// Reads data rows after the expected header; returns the rows.
std::vector<std::vector<double>> read_rows(const fs::path& path, const std::string& header, std::size_t cols) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::parse, path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw Error(ErrorCode::parse, path.string() + ": expected header '" + header + "'");
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      rows.push_back(parse_numbers(line, cols));
    } catch (const Error& e) {
      throw Error(ErrorCode::parse, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

int as_index(double v, int bound) {
  if (v != std::floor(v) || v < 0 || v >= bound) throw Error(ErrorCode::parse, "index out of range");
  return static_cast<int>(v);
}

}  // namespace

fs::path sidecar_path(const fs::path& csv) {
  fs::path p = csv;
  p += ".json";
  return p;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> parse_numbers(const std::string& line, std::size_t expected) {
  std::vector<double> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (true) {
    while (p < end && *p == ' ') ++p;
    double v = 0.0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw Error(ErrorCode::parse, "malformed number in '" + line + "'");
    out.push_back(v);
    p = next;
    while (p < end && *p == ' ') ++p;
    if (p == end) break;
    if (*p != ',') throw Error(ErrorCode::parse, "malformed row '" + line + "'");
    ++p;
  }
  if (out.size() != expected)
    throw Error(ErrorCode::parse, "expected " + std::to_string(expected) + " columns in '" + line + "'");
  return out;
}

void write_field(const fs::path& path, const SampledField& f) {
  const GridSpec& g = f.grid();
  json side = grid_json(g);
  side["domain"] = f.domain() == Domain::space ? "space" : "frequency";
  write_json(sidecar_path(path), side);
  std::ofstream out = open_out(path);
  out << (g.d == 1 ? "index_0,re,im\n" : "index_0,index_1,re,im\n");
  const int n = g.n();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g.d == 1) {
      out << i;
    } else {
      out << i / n << ',' << i % n;
    }
    out << ',' << format_double(f[i].real()) << ',' << format_double(f[i].imag()) << '\n';
  }
}

SampledField read_field(const fs::path& path) {
  const fs::path side_path = sidecar_path(path);
  const json side = read_json(side_path);
  const GridSpec g = grid_from(side, side_path);
  Domain domain = Domain::space;
  if (side.contains("domain")) {
    const std::string d = get<std::string>(side, "domain", side_path);
    if (d == "frequency") domain = Domain::frequency;
    else if (d != "space") throw Error(ErrorCode::parse, side_path.string() + ": bad domain");
  }
  const std::string header = g.d == 1 ? "index_0,re,im" : "index_0,index_1,re,im";
  const auto rows = read_rows(path, header, static_cast<std::size_t>(g.d) + 2);
  const int n = g.n();
  std::vector<cd> values(g.size());
  std::vector<char> seen(g.size(), 0);
  for (const auto& r : rows) {
    std::size_t idx = 0;
    try {
      idx = g.d == 1 ? static_cast<std::size_t>(as_index(r[0], n))
                     : static_cast<std::size_t>(as_index(r[0], n)) * n + as_index(r[1], n);
    } catch (const Error&) {
      throw Error(ErrorCode::parse, path.string() + ": index out of range");
    }
    if (seen[idx]) throw Error(ErrorCode::parse, path.string() + ": duplicate index");
    seen[idx] = 1;
    values[idx] = {r[g.d], r[g.d + 1]};
  }
  if (rows.size() != g.size()) throw Error(ErrorCode::parse, path.string() + ": row count does not match grid");
  for (const cd& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::parse, path.string() + ": non-finite value");
  return SampledField(g, std::move(values), domain);
}

void write_phase_field(const fs::path& path, const PhaseField& a) {
  const PhaseGrid& g = a.grid();
  json side{{"layout", to_string(g.layout)}, {"x", axis_json(g.x)}, {"xi", axis_json(g.xi)}};
  if (g.base) side["base"] = grid_json(*g.base);
  write_json(sidecar_path(path), side);
  std::ofstream out = open_out(path);
  out << "ix,ik,re,im\n";
  for (int i = 0; i < g.x.n; ++i)
    for (int k = 0; k < g.xi.n; ++k) {
      const cd v = a.at(i, k);
      out << i << ',' << k << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
}

PhaseField read_phase_field(const fs::path& path) {
  const fs::path side_path = sidecar_path(path);
  const json side = read_json(side_path);
  PhaseGrid g;
  try {
    g.layout = parse_layout(get<std::string>(side, "layout", side_path));
  } catch (const Error& e) {
    throw Error(ErrorCode::parse, side_path.string() + ": " + e.what());
  }
  if (side.contains("base")) {
    const GridSpec base = grid_from(side.at("base"), side_path);
    g = g.layout == PhaseLayout::stft ? PhaseGrid::stft(base) : PhaseGrid::symbol(base);
  } else {
    if (!side.contains("x") || !side.contains("xi")) throw Error(ErrorCode::parse, side_path.string() + ": missing axes");
    g.x = axis_from(side.at("x"), side_path);
    g.xi = axis_from(side.at("xi"), side_path);
    if (g.x.n <= 0 || g.xi.n <= 0 || !(g.x.step > 0) || !(g.xi.step > 0))
      throw Error(ErrorCode::parse, side_path.string() + ": invalid axes");
  }
  const auto rows = read_rows(path, "ix,ik,re,im", 4);
  if (rows.size() != g.size()) throw Error(ErrorCode::parse, path.string() + ": row count does not match grid");
  std::vector<cd> values(g.size());
  std::vector<char> seen(g.size(), 0);
  for (const auto& r : rows) {
    std::size_t idx = 0;
    try {
      idx = static_cast<std::size_t>(as_index(r[0], g.x.n)) * g.xi.n + as_index(r[1], g.xi.n);
    } catch (const Error&) {
      throw Error(ErrorCode::parse, path.string() + ": index out of range");
    }
    if (seen[idx]) throw Error(ErrorCode::parse, path.string() + ": duplicate index");
    seen[idx] = 1;
    if (!std::isfinite(r[2]) || !std::isfinite(r[3])) throw Error(ErrorCode::parse, path.string() + ": non-finite value");
    values[idx] = {r[2], r[3]};
  }
  return PhaseField(g, std::move(values));
}

void write_operator(const fs::path& path, const OperatorMatrix& M) {
  write_json(sidecar_path(path), grid_json(M.grid));
  std::ofstream out = open_out(path);
  out << "i,j,re,im\n";
  for (Eigen::Index i = 0; i < M.m.rows(); ++i)
    for (Eigen::Index j = 0; j < M.m.cols(); ++j)
      out << i << ',' << j << ',' << format_double(M.m(i, j).real()) << ',' << format_double(M.m(i, j).imag()) << '\n';
}

void write_spectrum(const fs::path& path, const std::vector<double>& sigma) {
  std::ofstream out = open_out(path);
  out << "j,sigma\n";
  for (std::size_t j = 0; j < sigma.size(); ++j) out << j << ',' << format_double(sigma[j]) << '\n';
}

}  // namespace tfa::io
