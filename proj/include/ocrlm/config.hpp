#pragma once

// Flat `key = value` run configuration with `#` comments. Every key has a
// built-in default; unknown keys and malformed values are rejected.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ocrlm {

class RunConfig {
 public:
  enum class Type { Int, UInt, Real, Bool, String, List, IntList };

  /// All keys at their defaults.
  RunConfig();

  /// Applies `key = value` lines; `source` names the input in error messages.
  void merge(std::istream& is, std::string_view source);
  void merge_file(const std::filesystem::path& path);
  /// Single override, e.g. from `--set key=value`.
  void set(std::string_view key, std::string_view value);
  void set_assignment(std::string_view assignment);

  bool has(std::string_view key) const { return values_.contains(std::string(key)); }
  const std::string& raw(std::string_view key) const;
  std::int64_t get_int(std::string_view key) const;
  std::uint64_t get_uint(std::string_view key) const;
  double get_real(std::string_view key) const;
  bool get_bool(std::string_view key) const;
  const std::string& get_string(std::string_view key) const;
  std::vector<std::string> get_list(std::string_view key) const;
  std::vector<int> get_int_list(std::string_view key) const;

  /// Fully resolved configuration, one key per line in key order.
  void write(std::ostream& os) const;
  std::string to_string() const;
  std::uint64_t hash() const;

  static const std::vector<std::string>& keys();

 private:
  std::map<std::string, std::string> values_;
};

/// "10..12" and "8,10,12" forms; throws ValidationError on malformed input.
std::vector<int> parse_int_list(std::string_view text);
std::vector<std::string> split_list(std::string_view text);

}  // namespace ocrlm
