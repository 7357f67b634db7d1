#include "trmap/error.hpp"

namespace trmap {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::InvalidShuffle: return "InvalidShuffle";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::InvalidBinaryTree: return "InvalidBinaryTree";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::NonTreeOrientation: return "NonTreeOrientation";
    case ErrorKind::NotTreeOriented: return "NotTreeOriented";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::IncompleteWord: return "IncompleteWord";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::InvalidFormat: return "InvalidFormat";
  }
  return "Unknown";
}

}  // namespace trmap
