#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hanoifib {

// Exact integer for move counts and path counts that outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace hanoifib
