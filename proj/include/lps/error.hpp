#pragma once

#include <stdexcept>
#include <string>

namespace lps {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2N+1 augmented positions would overflow std::size_t.
class InputTooLarge : public Error {
 public:
  using Error::Error;
};

/// The quadratic oracle was asked to run on a text longer than its cap.
class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Every symbol of the alphabet occurs in the text, so no dummy is left for
/// literal augmentation.
class DummyUnavailable : public Error {
 public:
  using Error::Error;
};

/// The augmented buffer could not be allocated (real failure or a budget).
class AugmentOutOfMemory : public Error {
 public:
  using Error::Error;
};

class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace lps
