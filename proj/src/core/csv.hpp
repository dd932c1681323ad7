#pragma once

#include <istream>
#include <string>
#include <vector>

namespace coverlens {

// RFC 4180-style CSV: quoted fields may contain commas, doubled quotes and
// newlines; CRLF and LF both accepted. Returns one vector of fields per row;
// blank rows are dropped.
std::vector<std::vector<std::string>> parse_csv(std::istream& in, const std::string& origin);
std::vector<std::vector<std::string>> read_csv(const std::string& path);

std::string csv_quote(const std::string& field);

}  // namespace coverlens
