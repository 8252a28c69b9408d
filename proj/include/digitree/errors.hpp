#pragma once

#include <stdexcept>
#include <string>

namespace digitree {

/// An oracle broke its approximation contract in a way that became observable.
class ContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured work bound.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace digitree
