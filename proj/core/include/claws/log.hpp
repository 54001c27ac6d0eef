#pragma once

#include <string_view>

namespace claws {

/// Configures the library logger from CLAWS_LOG (error | info | debug,
/// default error).  Messages go to stderr.  Safe to call more than once.
void init_logging();

void log_error(std::string_view message);
void log_info(std::string_view message);
void log_debug(std::string_view message);

}  // namespace claws
