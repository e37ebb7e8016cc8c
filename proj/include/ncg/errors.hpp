#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

// Input that cannot be parsed (descriptors, cycle notation, matrix files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family name or parameter set that has no construction.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed one of the desk-scale caps (order, degree,
// vertex count, memory, enumeration size).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncg
