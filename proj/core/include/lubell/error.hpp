#pragma once

#include <stdexcept>
#include <string>

namespace lubell {

// Error categories; the CLI maps these onto exit codes.
enum class Errc {
  validation,         // malformed mathematical object (cycle, bad bits, ...)
  precondition,       // documented operation precondition violated
  capacity,           // instance exceeds a documented cap
  budget,             // search budget exhausted
  threshold_not_met,  // extraction hypothesis fails (a mathematical "no")
  proof_step,         // an extraction step that should be impossible failed
  format,             // unparseable input text
};

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Errc kind() const { return kind_; }

 private:
  Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lubell
