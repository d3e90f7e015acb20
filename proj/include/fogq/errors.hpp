#pragma once
#include <stdexcept>
#include <string>

namespace fogq {

// error taxonomy mirrors the CLI exit codes:
//   invariant_error -> 1, precision_error -> 2, input_error -> 3
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a mathematical invariant of the data failed (impure weight, bad morphism, ...)
struct invariant_error : error {
    using error::error;
};

// not enough p-adic precision, or a rational reconstruction bound failed
struct precision_error : error {
    using error::error;
};

// malformed user input (parse errors, bad primes, non-squarefree f, ...)
struct input_error : error {
    using error::error;
};

} // namespace fogq
