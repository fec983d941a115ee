#include "arxid/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "arxid/error.hpp"
#include "arxid/pmu_io.hpp"

namespace arxid {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const std::vector<double>& NumericTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw Error(ErrorCode::MissingColumn, "column '" + std::string(name) + "' not found");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

NumericTable read_numeric_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");

  NumericTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = split(view);
    if (!have_header) {
      for (auto f : fields) table.header.emplace_back(f);
      table.columns.resize(fields.size());
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::MalformedRow, path + ":" + std::to_string(line_no) + ": expected " +
                                               std::to_string(table.header.size()) +
                                               " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      double v = 0.0;
      const auto f = fields[i];
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::MalformedRow, path + ":" + std::to_string(line_no) +
                                                 ": bad value '" + std::string(f) + "' in column '" +
                                                 table.header[i] + "'");
      }
      table.columns[i].push_back(v);
    }
    table.line_numbers.push_back(line_no);
  }
  if (!have_header) throw Error(ErrorCode::MalformedRow, path + ": no header row");
  return table;
}

void write_numeric_csv(const std::string& path, std::span<const std::string> header,
                       std::span<const std::vector<double>> columns,
                       std::span<const std::string> comments) {
  if (header.size() != columns.size()) {
    throw Error(ErrorCode::InvalidArgument, "header and column counts differ");
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw Error(ErrorCode::LengthMismatch, "CSV columns differ in length");
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << format_double(columns[i][r]);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

void write_dataset_csv(const std::string& path, const Dataset& data,
                       std::span<const std::string> comments) {
  if (data.u.size() != data.y.size()) {
    throw Error(ErrorCode::LengthMismatch, "dataset u and y lengths differ");
  }
  std::vector<double> t(data.u.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = data.u.time_at(i);
  const std::string header[] = {"t", "u", "y"};
  const std::vector<double> columns[] = {t, data.u.values, data.y.values};
  write_numeric_csv(path, header, columns, comments);
}

Dataset read_dataset_csv(const std::string& path) {
  const NumericTable table = read_numeric_csv(path);
  const auto& t = table.column("t");
  if (t.size() < 3) throw Error(ErrorCode::TooFewSamples, path + ": need at least 3 rows");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) {
      throw Error(ErrorCode::NonMonotoneTime,
                  path + ":" + std::to_string(table.line_numbers[i]) + ": time not increasing");
    }
  }
  infer_sampling(t);
  const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  Dataset data;
  data.u = TimeSeries{h, t.front(), table.column("u"), "p.u."};
  data.y = TimeSeries{h, t.front(), table.column("y"), "p.u."};
  return data;
}

}  // namespace arxid
