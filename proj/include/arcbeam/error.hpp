#pragma once

#include <stdexcept>
#include <string>

namespace arcbeam {

// Malformed or inconsistent input data: treebank files, cluster files,
// model files, constraint sets.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A command line that cannot be interpreted.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arcbeam
