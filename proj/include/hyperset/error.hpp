#ifndef HYPERSET_ERROR_HPP
#define HYPERSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperset {

// Domain error: a precondition or input-format violation. The message names
// the violated clause so the CLI can surface it verbatim.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperset

#endif
