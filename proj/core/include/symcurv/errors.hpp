#pragma once

#include <stdexcept>
#include <string>

namespace symcurv {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DependentInput : public Error {
 public:
  using Error::Error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

// 2(b,a)/(a,a) came out non-integral. Only a library bug can trigger this.
class NotInteger : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class WrongCase : public Error {
 public:
  using Error::Error;
};

// An internal cross-check between two computations disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcurv
