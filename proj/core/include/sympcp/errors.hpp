#ifndef SYMPCP_ERRORS_HPP_
#define SYMPCP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sympcp {

  // Base class for everything thrown by the library. Subclasses mark the
  // failures that are domain verdicts rather than bad input.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input text that does not follow the expected JSON layout.
  class FormatError : public Error {
   public:
    using Error::Error;
  };

  // A matrix that is not the image of any string pair.
  class NotInImage : public Error {
   public:
    using Error::Error;
  };

  // A generator relation that does not factor into 2-2 / 2-3 blocks.
  class MalformedRelation : public Error {
   public:
    using Error::Error;
  };

  // A PCP index sequence that is not a solution, or that does not parse as
  // an encoded derivation.
  class MalformedSolution : public Error {
   public:
    using Error::Error;
  };

  class InvalidDerivation : public Error {
   public:
    using Error::Error;
  };

}  // namespace sympcp

#endif  // SYMPCP_ERRORS_HPP_
