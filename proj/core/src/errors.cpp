#include "claws/errors.hpp"

#include <utility>

namespace claws {

namespace {

std::string join_fields(const std::string& what, const std::vector<std::string>& fields) {
  std::string out = what;
  if (!fields.empty()) {
    out += " [";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ", ";
      out += fields[i];
    }
    out += "]";
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::string& what, std::vector<std::string> fields)
    : Error(join_fields(what, fields)), fields_(std::move(fields)) {}

StageError::StageError(std::string stage, const std::string& what)
    : Error(stage + ": " + what), stage_(std::move(stage)) {}

}  // namespace claws
