#include "tlj/config.hpp"

#include <cstdlib>

namespace tlj {

static int read_cap() {
    if (const char* env = std::getenv("TLJ_MAX_STRANDS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

int max_strands() {
    static const int cap = read_cap();
    return cap;
}

int jones_wenzl_cap() {
    int cap = max_strands();
    return cap > 10 ? cap : 10;
}

} // namespace tlj
