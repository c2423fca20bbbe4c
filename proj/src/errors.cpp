#include "altexp/errors.hpp"

#include <sstream>

namespace altexp {

namespace {

std::string describe_missing(const std::string& what_kind, IndexTriple key) {
  std::ostringstream os;
  os << "missing " << what_kind << " for key " << key;
  return os.str();
}

}  // namespace

MissingEntryError::MissingEntryError(const std::string& what_kind, IndexTriple key)
    : Error(describe_missing(what_kind, key)), key_(key) {}

ParityError::ParityError(int N)
    : Error("interpolation requires odd N = 2M+1, got N = " + std::to_string(N)) {}

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : Error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

IoError::IoError(const std::string& path, const std::string& message) : Error(path + ": " + message) {}

}  // namespace altexp
