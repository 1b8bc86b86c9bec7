#include "eprsim/parallel.hpp"

#include <cstdlib>
#include <string>

namespace eprsim {

unsigned default_workers() {
    const char* env = std::getenv("EPRSIM_WORKERS");
    if (env == nullptr) return 1;
    try {
        const long v = std::stol(env);
        return v >= 1 ? static_cast<unsigned>(v) : 1u;
    } catch (...) {
        return 1;
    }
}

}  // namespace eprsim
