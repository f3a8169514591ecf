#pragma once

#include <stdexcept>
#include <string>

namespace kflag {

/// Malformed input: bad Cartan matrix, out-of-range generator index,
/// unparsable word or bit string, mismatched dimensions.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid request that this build cannot answer, e.g. asking for
/// the positive roots of a Cartan matrix that is not of finite type.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kflag
