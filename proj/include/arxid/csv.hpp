#pragma once

// Minimal numeric CSV support: one header row, comma separated, lines that
// start with '#' are comments (used for metadata blocks).

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arxid/simulate.hpp"

namespace arxid {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

struct NumericTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row

  // Throws MissingColumn.
  const std::vector<double>& column(std::string_view name) const;
  std::size_t rows() const noexcept { return line_numbers.size(); }
};

// Throws Io when the file cannot be opened and MalformedRow (with the line
// number) on wrong field counts, unparsable or non-finite numbers.
NumericTable read_numeric_csv(const std::string& path);

// `comments` are written first, each prefixed with "# ".
void write_numeric_csv(const std::string& path, std::span<const std::string> header,
                       std::span<const std::vector<double>> columns,
                       std::span<const std::string> comments = {});

// Dataset files carry columns t,u,y.
void write_dataset_csv(const std::string& path, const Dataset& data,
                       std::span<const std::string> comments = {});
Dataset read_dataset_csv(const std::string& path);

}  // namespace arxid
