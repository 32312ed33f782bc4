#pragma once

#include <stdexcept>
#include <string>

namespace a2r {

enum class errc {
  odd_total_degree,
  invalid_degree,
  too_large,
  no_kernel_half_edges,
  non_positive_argument,
  bad_interval,
  out_of_range,
  empty_sample,
  bad_config,
  io_error,
};

const char* errc_name(errc code) noexcept;

// Domain error. The CLI maps these to exit code 1; usage errors exit 2.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& what) {
  throw error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace a2r
