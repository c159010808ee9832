#pragma once

#include <stdexcept>
#include <string>

namespace turancert {

// Adaptive quadrature exhausted its subdivision budget before reaching the
// requested tolerance.
class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified norm estimate could not be refined to the requested gap
// (precision floor or evaluation budget).
class certification_error : public std::runtime_error {
 public:
  explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

// A stated hypothesis of an inequality check is violated by the input
// (e.g. the network does not vanish at the origin).
class hypothesis_error : public std::invalid_argument {
 public:
  explicit hypothesis_error(const std::string& what) : std::invalid_argument(what) {}
};

// No truncation order within desk-scale bounds satisfies the certification
// condition for the requested spacing.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Sign-change isolation found an implausible number of zero crossings.
class pathological_profile_error : public std::runtime_error {
 public:
  explicit pathological_profile_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace turancert
