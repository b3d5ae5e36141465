#pragma once

#include <stdexcept>
#include <string>

namespace addeq {

// Thrown when an enumeration or search would exceed its resource guard.
// Guards fail loudly; nothing is silently truncated.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (graph files, code files, zone maps, bijections).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace addeq
