#pragma once

#include <stdexcept>
#include <string>

namespace chebtl {

enum class Errc {
  not_perfect_matching,
  crossing,
  odd_total,
  signature_mismatch,
  index_out_of_range,
  not_a_complex,
  invalid_argument,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library; the code names the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chebtl
