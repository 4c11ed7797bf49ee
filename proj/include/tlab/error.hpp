#ifndef TLAB_ERROR_HPP
#define TLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tlab {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural invariant violated (self-loop, unknown vertex, bad label, ...).
class validation_error : public error {
 public:
  using error::error;
};

class disconnected_error : public error {
 public:
  disconnected_error() : error("disconnected") {}
  explicit disconnected_error(const std::string& what) : error(what) {}
};

class not_dag_error : public error {
 public:
  not_dag_error() : error("not a DAG") {}
};

// Exact search refused the instance because |E|*a exceeds the slot cap.
class instance_too_large_error : public error {
 public:
  instance_too_large_error() : error("instance too large for exact oracle") {}
};

class infeasible_error : public error {
 public:
  infeasible_error() : error("infeasible at this age bound") {}
  explicit infeasible_error(const std::string& what) : error(what) {}
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tlab

#endif  // TLAB_ERROR_HPP
