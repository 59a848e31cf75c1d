#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusscat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank or Fuss parameter outside their domain (both must be >= 1).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class NotWeaklyDecreasing : public InvalidPartition {
 public:
  explicit NotWeaklyDecreasing(std::size_t index)
      : InvalidPartition("parts are not weakly decreasing at index " + std::to_string(index)),
        index_(index) {}
  /// 1-based index i with parts[i] > parts[i-1].
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ExceedsStaircase : public InvalidPartition {
 public:
  explicit ExceedsStaircase(std::size_t index)
      : InvalidPartition("part " + std::to_string(index) + " exceeds its staircase bound"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class OutOfRangeEntry : public Error {
 public:
  using Error::Error;
};

class RankTooSmall : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(int label)
      : Error("polygon has no vertex labeled " + std::to_string(label)), label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

class NotAnMDiagonal : public Error {
 public:
  using Error::Error;
};

class InvalidDissection : public Error {
 public:
  using Error::Error;
};

/// Raised when an m-diagonal crosses a non-consecutive set of snake diagonals.
/// Never expected; signals an implementation bug.
class NonConsecutiveCrossing : public Error {
 public:
  using Error::Error;
};

class WrongLabeling : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// JSON input does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace fusscat
