#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace soe::cli {

enum class Format { json, csv, table };

// Rows of preformatted cells shared by the csv and table writers.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& t);
void write_table(std::ostream& out, const Table& t);

// %.17g
std::string format_double(double v);
std::string format_bool(bool v);

}  // namespace soe::cli
