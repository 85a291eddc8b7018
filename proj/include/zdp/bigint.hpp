#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zdp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace zdp
