#pragma once

#include <stdexcept>
#include <string>

namespace kclab {

/// Domain error: a precondition or input contract was violated.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kclab
