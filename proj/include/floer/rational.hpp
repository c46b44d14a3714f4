#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace floer {

// Expression templates off: an `auto` holding a lazy expression can outlive its operands.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

}  // namespace floer
