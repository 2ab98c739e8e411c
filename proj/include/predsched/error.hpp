#pragma once

#include <stdexcept>
#include <string>

namespace predsched {

/// Malformed or out-of-contract input (bad rational text, invalid instance,
/// unsorted predictions, oversized exhaustive search, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace predsched
