#pragma once

#include <stdexcept>
#include <string>

namespace journet {

enum class ErrorKind {
  Usage,     // bad argument or token supplied by the caller
  Data,      // malformed or inconsistent input data
  Io,        // file could not be opened / written
  Format,    // persisted file has wrong header or version
  NotFound,  // node or record not present
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace journet
