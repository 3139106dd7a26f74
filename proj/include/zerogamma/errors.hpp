#pragma once

#include <stdexcept>
#include <string>

namespace zerogamma {

/// Raised when an argument lies outside the domain of a formula
/// (k = 0, sigma off the open strip, s = 1, oracle cap exceeded, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// A fixed-point map left its domain at the requested (t, k).
///
/// `f` signals this when the inverted bracket is not positive or the root
/// argument is negative; `g` signals it when t log k sits within the guard
/// distance of a pole of cot or sec.
class singular_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace zerogamma
