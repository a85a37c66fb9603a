#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace checkers {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace checkers
