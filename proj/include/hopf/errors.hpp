#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain/codomain names of two maps do not line up.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class IllegalComodule : public Error {
 public:
  using Error::Error;
};

class IllegalChain : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class SquareViolation : public Error {
 public:
  SquareViolation(const std::string& what, int n, int m)
      : Error(what), n_(n), m_(m) {}
  int n() const { return n_; }
  int m() const { return m_; }

 private:
  int n_;
  int m_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopf
