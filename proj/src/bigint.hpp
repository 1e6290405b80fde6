#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tgf {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace tgf
