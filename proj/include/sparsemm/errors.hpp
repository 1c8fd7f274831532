#pragma once

#include <stdexcept>
#include <string>

namespace sparsemm {

struct OutOfBoundsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DuplicateEntryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateRowError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sparsemm
