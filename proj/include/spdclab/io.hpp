#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spdclab {

// Section -> (key -> raw value string). Parsed from the INI-style config
// documents described in the README: '#' and ';' start comments, keys are
// case-sensitive, whitespace around '=' is ignored.
using ConfigDoc = std::map<std::string, std::map<std::string, std::string>>;

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

ConfigDoc parse_ini(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// 17 significant digits, scientific notation: lossless round trip of doubles.
std::string format_double(double v);

// FNV-1a 64-bit over the given bytes; used to stamp emitted files with the
// hash of the originating config document.
std::uint64_t fnv1a(const std::string& bytes);
std::string hash_hex(const std::string& bytes);

struct CsvWriter {
  std::vector<std::string> meta;     // emitted as leading '# key: value' lines
  std::vector<std::string> columns;  // header row
  std::vector<std::vector<std::string>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_row(const std::vector<double>& values);
  void add_row_raw(std::vector<std::string> values);
  std::string str() const;
};

}  // namespace spdclab
