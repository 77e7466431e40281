#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nshift {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace nshift
