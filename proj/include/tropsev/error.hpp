#ifndef TROPSEV_ERROR_HPP
#define TROPSEV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tropsev {

/// Carries a stable machine-readable code next to the human message.
/// Codes ending in "Gate" signal arithmetic obstructions rather than bad
/// input; the CLI maps them to a distinct exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

  bool is_gate() const {
    return code_.size() >= 4 && code_.compare(code_.size() - 4, 4, "Gate") == 0;
  }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace tropsev

#endif
