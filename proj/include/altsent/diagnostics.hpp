#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace altsent {

/// Fatal problem with an input file (unreadable, empty, wrong header).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration value. The message starts with the field name.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Collects non-fatal warnings raised while loading or processing data.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  std::size_t count() const noexcept { return warnings.size(); }
};

}  // namespace altsent
