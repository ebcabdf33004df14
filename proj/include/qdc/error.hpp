#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

// Machine-checkable failure categories; every library error carries one.
enum class ErrorCode {
  not_square,
  not_hermitian,
  not_unitary,
  dimension_mismatch,
  zero_vector,
  unknown_label,
  empty_keep_set,
  invalid_subset,
  invalid_dimension,
  label_mismatch,
  invalid_ensemble,
  no_sender,
  no_receiver,
  fewer_than_two_receivers,
  not_two_receivers,
  unassigned_sender,
  invalid_cut,
  bad_parameter,
  syntax_error,
  io_error,
  validation_failed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qdc
