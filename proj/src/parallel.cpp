#include "apcqc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace apcqc {

int default_thread_count() {
    if (const char* env = std::getenv("APCQC_THREADS")) {
        try {
            int v = std::stoi(env);
            return v < 1 ? 1 : v;
        } catch (const std::exception&) {
            // fall through to hardware default
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace apcqc
