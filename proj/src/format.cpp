#include "netrank/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace netrank {

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

double round_significant(double v, int digits) {
    return std::strtod(format_significant(v, digits).c_str(), nullptr);
}

}  // namespace netrank
