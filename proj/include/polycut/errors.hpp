#pragma once

#include <stdexcept>
#include <string>

namespace polycut {

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateCut : std::runtime_error {
  explicit DegenerateCut(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateEmbedding : std::runtime_error {
  explicit DegenerateEmbedding(const std::string& msg) : std::runtime_error(msg) {}
};

struct CenteringError : std::runtime_error {
  explicit CenteringError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polycut
