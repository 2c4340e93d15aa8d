// Lossless text round-tripping of reals and complex values.
#pragma once

#include <string>
#include <string_view>

#include "hblab/series.hpp"

namespace hblab {

/// 17 significant digits; parses back to the identical double.
std::string format_real(double x);

/// "re" for real values, otherwise "re+imi" / "re-imi".
std::string format_complex(Complex z);

bool parse_real(std::string_view token, double& out);
bool parse_complex(std::string_view token, Complex& out);

}  // namespace hblab
