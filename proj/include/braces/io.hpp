#pragma once

// Brace files:
//
//   brace v1
//   group n1 n2 ... nk
//   rule <family> <params...>      or      table
//                                          <n rows of n entries>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "braces/brace.hpp"

namespace braces {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Families: trivial; Bpp p; Bp2 p; Tppq p q w mu; Tp2q p q w; Bppq p q w [mu];
// Bp2q p q w [mu]. Throws std::invalid_argument on bad parameters.
Brace brace_from_rule(const std::string& family, const std::vector<std::int64_t>& params,
                      const AbelianGroup& group);

Brace parse_brace(std::istream& in);
Brace parse_brace(const std::string& text);
Brace read_brace_file(const std::filesystem::path& path);

// Rule-tagged braces are written as a rule unless `force_table`.
std::string serialize_brace(const Brace& b, bool force_table = false);
void write_brace_file(const std::filesystem::path& path, const Brace& b, bool force_table = false);

}  // namespace braces
