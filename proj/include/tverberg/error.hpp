#pragma once

#include <stdexcept>
#include <string>

namespace tverberg {

/** Base class for every error raised by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Coordinate vectors or point sets of incompatible dimension. */
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what = "")
      : Error(what.empty() ? "dimension" : "dimension: " + what) {}
};

/** Rank query outside 1..|S|. */
class RankError : public Error {
 public:
  RankError() : Error("rank out of range") {}
};

/** Input smaller than an algorithm's size requirement. */
class InsufficientPointsError : public Error {
 public:
  explicit InsufficientPointsError(const std::string& what) : Error(what) {}
};

class InvalidPartitionError : public Error {
 public:
  explicit InvalidPartitionError(const std::string& what = "")
      : Error(what.empty() ? "invalid partition" : "invalid partition: " + what) {}
};

/** An exhaustive enumeration would exceed its configured budget. */
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what = "instance too large")
      : Error(what) {}
};

class IncompatibleBlocksError : public Error {
 public:
  explicit IncompatibleBlocksError(const std::string& what = "")
      : Error(what.empty() ? "incompatible blocks" : "incompatible blocks: " + what) {}
};

/** Malformed LP rows. */
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what = "")
      : Error(what.empty() ? "shape" : "shape: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace tverberg
