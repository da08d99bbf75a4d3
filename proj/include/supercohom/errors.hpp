#pragma once

#include <stdexcept>

namespace supercohom {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContainmentError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class AlgebraMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCocycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotStronglyAbelianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotASectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace supercohom
