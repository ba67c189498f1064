#include "mpv/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace mpv {

std::string BigFloat::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRe", digits);
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

std::string BigComplex::str(int digits) const {
    std::string s = re.str(digits);
    if (im.sign() >= 0)
        s += " + " + im.str(digits) + "*I";
    else
        s += " - " + (-im).str(digits) + "*I";
    return s;
}

} // namespace mpv
