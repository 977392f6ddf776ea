#pragma once

#include <stdexcept>
#include <string>

namespace z2ss {

// A computation the model deliberately does not cover: negative weights,
// bases that are not equivariantly 1-connected, coefficient rows outside the
// supported catalog.  The CLI maps this to exit code 2.
class UnsupportedError : public std::runtime_error {
  public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A ring product the truncated projective model leaves undetermined.
class UnspecifiedProduct : public std::runtime_error {
  public:
    explicit UnspecifiedProduct(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace z2ss
