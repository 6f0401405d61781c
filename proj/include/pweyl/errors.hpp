#pragma once

#include <stdexcept>
#include <string>

namespace pweyl {

// Division by an exact zero (field element, polynomial, or rational function).
class division_by_zero : public std::domain_error {
 public:
  explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// Requested cyclotomic conductor exceeds the configured resource bound.
class conductor_limit_error : public std::runtime_error {
 public:
  explicit conductor_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live in polynomial rings of different rank.
class rank_mismatch : public std::invalid_argument {
 public:
  explicit rank_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Group closure did not reach a fixpoint within the element bound.
class group_bound_exceeded : public std::runtime_error {
 public:
  explicit group_bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A constructed solution failed one of its own certification checks.
class verification_error : public std::runtime_error {
 public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input that is detectable before any construction runs.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Expression syntax error, with the byte offset of the offending token.
class parse_error : public std::invalid_argument {
 public:
  parse_error(std::size_t offset, const std::string& what)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace pweyl
