#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsk {

/// Invalid group datum: singular or mismatched matrices, zero BS parameter.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A requested enumeration exceeds the configured resource bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-posed input to an otherwise valid operation (e.g. duplicate Gram elements).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The group datum is outside every explicit affine-witness regime.
class UnsupportedWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bsk
