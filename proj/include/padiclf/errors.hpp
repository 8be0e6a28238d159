#pragma once

#include <stdexcept>
#include <string>

namespace padiclf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the domain an operation is defined on (bad conductor, p = 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A p-adic quantity is not known to enough digits to decide the answer.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace padiclf
