#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bellperm {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace bellperm
