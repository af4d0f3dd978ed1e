#pragma once

#include <stdexcept>
#include <string>

namespace ecsldg {

/// Invalid user input: bad configuration, out-of-range parameters,
/// inconsistent meshes. The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fatal condition raised while integrating (singular solve, support leaving
/// the velocity box, non-physical field denominators). CLI exit status 3.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ecsldg
