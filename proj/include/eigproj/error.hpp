#pragma once

#include <stdexcept>
#include <string>

namespace eigproj {

enum class ErrorKind {
  Malformed,        // structurally broken input (unknown ids, bad shapes)
  InvalidCategory,  // category fails validation or a required EI/skeletal check
  InvalidModule,    // module fails functoriality
  NotGorenstein,    // category not projective over k
  NotFree,          // category fails the unique factorization property
  OutOfRange,       // index outside the admissible range
  Precondition,     // other operation precondition not met
  CapExceeded,      // generator produced too many morphisms
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eigproj
