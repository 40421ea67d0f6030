#ifndef MEALY_ERROR_HPP_
#define MEALY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mealy {

  // Malformed input text (JSON syntax, word syntax, catalog names).
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Structurally well-formed description that is not a valid automaton.
  class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A configured bound was hit.  lower_bound() is the size reached when the
  // computation stopped, so callers can still report progress.
  class ResourceLimitError : public std::runtime_error {
   public:
    ResourceLimitError(std::string const& what, std::size_t lower_bound)
        : std::runtime_error(what), _lower_bound(lower_bound) {}

    [[nodiscard]] std::size_t lower_bound() const noexcept {
      return _lower_bound;
    }

   private:
    std::size_t _lower_bound;
  };

}  // namespace mealy

#endif  // MEALY_ERROR_HPP_
