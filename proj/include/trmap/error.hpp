#pragma once

#include <stdexcept>
#include <string>

namespace trmap {

enum class ErrorKind {
  InvalidAlphabet,
  InvalidShuffle,
  InvalidWalk,
  InvalidTree,
  InvalidBinaryTree,
  InvalidPartition,
  InvalidMap,
  NonTreeOrientation,
  NotTreeOriented,
  SizeMismatch,
  IncompleteWord,
  InvalidPair,
  InvalidFormat,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind()` lets
// callers and tests distinguish the precondition that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace trmap
