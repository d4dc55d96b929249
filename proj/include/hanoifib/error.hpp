#pragma once

#include <stdexcept>
#include <string>

namespace hanoifib {

enum class Errc {
  kInvalidState = 1,
  kIllegalMove,
  kDomain,
  kUnsupported,
  kResource,
  kInvalidWord,
  kUnknownSuite,
  kInternal,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto hf_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hanoifib
