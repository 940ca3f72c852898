#pragma once

#include <stdexcept>
#include <string>

namespace fdg {

enum class errc {
  duplicate_name,
  empty_universe,
  unknown_name,
  unknown_agent,
  capacity_exceeded,
  partition_mismatch,
  empty_subset,
  shape_mismatch,
  parse_error,
  arc_before_agent,
  duplicate_situations_line,
  missing_profile,
  arity_mismatch,
  malformed_game,
  validation_failed,
  io_error,
};

const char* to_string(errc code);

// Domain error carrying a machine-checkable code next to the human message.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace fdg
