#pragma once

#include <string>

namespace idem::log {

/// Level comes from SOLVER_LOG={off,info,debug}; default info. Messages go
/// to stderr so machine-readable stdout stays clean.
enum class Level { Off = 0, Info = 1, Debug = 2 };

Level level();
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace idem::log
