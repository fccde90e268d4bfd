#pragma once

#include <string>
#include <vector>

namespace curalg {

/// Integral weight in fundamental-weight coordinates, or a root in simple-root coordinates.
using Weight = std::vector<int>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight scaled(const Weight& a, int k);
bool is_zero_weight(const Weight& a);

/// "[2,0,-1]"
std::string weight_string(const Weight& w);

}  // namespace curalg
