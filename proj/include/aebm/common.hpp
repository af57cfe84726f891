#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace aebm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
template <class... Args>
std::string msg(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

template <class... Args>
[[noreturn]] inline void fail(Args&&... args) {
  throw Error(detail::msg(std::forward<Args>(args)...));
}

template <class... Args>
inline void check(bool cond, Args&&... args) {
  if (!cond) fail(std::forward<Args>(args)...);
}

}  // namespace aebm
