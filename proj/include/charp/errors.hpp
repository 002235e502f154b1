#pragma once

#include <stdexcept>

namespace charp {

/// The requested instance lies outside the range a criterion is stated for
/// (e.g. the Fedder test with deg f > n+1).  Distinct from a negative verdict.
class UnsupportedRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace charp
