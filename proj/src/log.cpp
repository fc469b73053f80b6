#include "idem/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace idem::log {

Level level() {
    static Level lvl = [] {
        const char* env = std::getenv("SOLVER_LOG");
        if (!env) return Level::Info;
        if (std::strcmp(env, "off") == 0) return Level::Off;
        if (std::strcmp(env, "debug") == 0) return Level::Debug;
        return Level::Info;
    }();
    return lvl;
}

void info(const std::string& msg) {
    if (level() >= Level::Info) std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

void debug(const std::string& msg) {
    if (level() >= Level::Debug)
        std::fprintf(stderr, "[debug] %s\n", msg.c_str());
}

}  // namespace idem::log
