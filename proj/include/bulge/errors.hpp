#pragma once

#include <stdexcept>
#include <string>

namespace bulge {

// Base for every failure the library reports. Callers that only care about
// "input rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangle : public Error {
 public:
  using Error::Error;
};

class InvalidAngles : public Error {
 public:
  using Error::Error;
};

class ConcaveUnsupported : public Error {
 public:
  ConcaveUnsupported()
      : Error("operation requires a convex bulging triangle (acute or right base)") {}
};

class NotRightAngled : public Error {
 public:
  NotRightAngled() : Error("base triangle is not right-angled") {}
};

class NotIsosceles : public Error {
 public:
  NotIsosceles() : Error("base triangle has no pair of equal angles") {}
};

class BadLegs : public Error {
 public:
  using Error::Error;
};

class Inconclusive : public Error {
 public:
  using Error::Error;
};

}  // namespace bulge
