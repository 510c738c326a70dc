#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clausegen {

// Base class for every fault raised by the library. Negative answers
// ("does not subsume", "unknown within budget") are values, never faults.
class Fault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class PreconditionError : public Fault {
 public:
  using Fault::Fault;
};

// A configured cap was exceeded. `cap` names the limit, `flag` the CLI
// option that raises it.
class ResourceError : public Fault {
 public:
  ResourceError(std::string cap, std::string flag, std::size_t limit)
      : Fault("resource cap exceeded: " + cap + " > " + std::to_string(limit) +
              " (raise with " + flag + ")"),
        cap_(std::move(cap)),
        flag_(std::move(flag)),
        limit_(limit) {}

  const std::string& cap() const noexcept { return cap_; }
  const std::string& flag() const noexcept { return flag_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::string flag_;
  std::size_t limit_;
};

class ParseError : public Fault {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Fault(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace clausegen
