#include "claws/log.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace claws {

namespace {

std::shared_ptr<spdlog::logger> logger() {
  static std::once_flag once;
  static std::shared_ptr<spdlog::logger> instance;
  std::call_once(once, [] {
    instance = spdlog::stderr_logger_mt("claws");
    instance->set_pattern("[%l] %v");
    instance->set_level(spdlog::level::err);
  });
  return instance;
}

}  // namespace

void init_logging() {
  auto log = logger();
  const char* env = std::getenv("CLAWS_LOG");
  const std::string level = env ? env : "error";
  if (level == "debug") log->set_level(spdlog::level::debug);
  else if (level == "info") log->set_level(spdlog::level::info);
  else log->set_level(spdlog::level::err);
}

void log_error(std::string_view message) { logger()->error("{}", message); }
void log_info(std::string_view message) { logger()->info("{}", message); }
void log_debug(std::string_view message) { logger()->debug("{}", message); }

}  // namespace claws
