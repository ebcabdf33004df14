#include "qdc/error.hpp"

namespace qdc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_square: return "NotSquare";
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::not_unitary: return "NotUnitary";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::empty_keep_set: return "EmptyKeepSet";
    case ErrorCode::invalid_subset: return "InvalidSubset";
    case ErrorCode::invalid_dimension: return "InvalidDimension";
    case ErrorCode::label_mismatch: return "LabelMismatch";
    case ErrorCode::invalid_ensemble: return "InvalidEnsemble";
    case ErrorCode::no_sender: return "NoSender";
    case ErrorCode::no_receiver: return "NoReceiver";
    case ErrorCode::fewer_than_two_receivers: return "FewerThanTwoReceivers";
    case ErrorCode::not_two_receivers: return "NotTwoReceivers";
    case ErrorCode::unassigned_sender: return "UnassignedSender";
    case ErrorCode::invalid_cut: return "InvalidCut";
    case ErrorCode::bad_parameter: return "BadParameter";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::validation_failed: return "ValidationFailed";
  }
  return "UnknownError";
}

}  // namespace qdc
