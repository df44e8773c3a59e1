#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goodstein {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidBase : public Error {
 public:
  using Error::Error;
};

// A resource limit in Budget was hit. The computation is not wrong, only
// too large to finish.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Decrement or a Goodstein step was applied to the zero representation.
class Underflow : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at offset " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class NonCanonical : public Error {
 public:
  using Error::Error;
};

// The Increase* Plateau* Descent* step order was broken at `index`.
class OscillationDetected : public Error {
 public:
  explicit OscillationDetected(std::uint64_t index)
      : Error("step classes oscillate at term " + std::to_string(index)),
        index_(index) {}

  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

}  // namespace goodstein
