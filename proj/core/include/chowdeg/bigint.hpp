#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace chowdeg {

/// Arbitrary precision integer used for all combinatorial values.
using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient with the usual convention that out-of-range k gives 0.
Int binomial(long n, long k);

Int factorial(long n);

/// Multinomial coefficient s! / (parts[0]! * parts[1]! * ...).
/// Requires the parts to be non-negative and sum to s; returns 0 otherwise.
Int multinomial(long s, const std::vector<long>& parts);

} // namespace chowdeg
