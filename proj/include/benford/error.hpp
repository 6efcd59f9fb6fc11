#pragma once

#include <stdexcept>
#include <string>

namespace benford {

// Every failure raised by the library. The kind decides the CLI exit code.
class error : public std::runtime_error {
public:
  enum class kind {
    validation,          // bad argument or precondition
    no_significant_digit,
    parse,
    io,
  };

  error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}

  kind code() const noexcept { return kind_; }

private:
  kind kind_;
};

inline error validation_error(const std::string& what) {
  return error(error::kind::validation, what);
}

} // namespace benford
