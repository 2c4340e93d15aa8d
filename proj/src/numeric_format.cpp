#include "hblab/numeric_format.hpp"

#include <charconv>
#include <cstdio>

namespace hblab {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_real(z.real());
    std::string s = format_real(z.real());
    if (z.imag() >= 0.0) s += '+';
    s += format_real(z.imag());
    s += 'i';
    return s;
}

bool parse_real(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_complex(std::string_view token, Complex& out) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = token.data() + token.size();

    double re = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, re);
    if (ec != std::errc()) return false;
    if (ptr == last) {
        out = Complex(re, 0.0);
        return true;
    }
    if (*(last - 1) != 'i') return false;
    if (*ptr != '+' && *ptr != '-') return false;
    // from_chars rejects a leading '+'; the '-' it can keep.
    const char* imag_first = (*ptr == '+') ? ptr + 1 : ptr;
    double im = 0.0;
    auto [ptr2, ec2] = std::from_chars(imag_first, last - 1, im);
    if (ec2 != std::errc() || ptr2 != last - 1) return false;
    out = Complex(re, im);
    return true;
}

}  // namespace hblab
