#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

enum class Errc {
  validation_failed,    // scenario or stats invariant violated
  precondition,         // operation called outside its contract
  unsupported_sampling, // unbounded-variance interference or complex domain
  degenerate_sample,    // all-identical or otherwise unusable sample set
  degenerate_column,    // zero-variance or linearly dependent batch column
  singular_covariance,  // Gaussian joint not positive semidefinite
  parse,                // malformed config document
  io,                   // file read/write failure
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace dpc
