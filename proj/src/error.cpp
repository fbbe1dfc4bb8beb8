#include "onep/error.hpp"

namespace onep {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotConnected: return "NOT_CONNECTED";
        case ErrorCode::BadInvolution: return "BAD_INVOLUTION";
        case ErrorCode::BadReference: return "BAD_REFERENCE";
        case ErrorCode::PositiveGenus: return "POSITIVE_GENUS";
        case ErrorCode::FakeDegreeNot4: return "FAKE_DEGREE_NOT_4";
        case ErrorCode::FakeNotTransversal: return "FAKE_NOT_TRANSVERSAL";
        case ErrorCode::FakeFacesNotDistinct: return "FAKE_FACES_NOT_DISTINCT";
        case ErrorCode::EdgeMulticrossed: return "EDGE_MULTICROSSED";
        case ErrorCode::AdjacentEdgesCross: return "ADJACENT_EDGES_CROSS";
        case ErrorCode::NotSimple: return "NOT_SIMPLE";
        case ErrorCode::UnknownVertex: return "UNKNOWN_VERTEX";
        case ErrorCode::UnknownEdge: return "UNKNOWN_EDGE";
        case ErrorCode::UnknownFace: return "UNKNOWN_FACE";
        case ErrorCode::Disconnected: return "DISCONNECTED";
        case ErrorCode::NotTriangulation: return "NOT_TRIANGULATION";
        case ErrorCode::NotMaximal: return "NOT_MAXIMAL";
        case ErrorCode::BadExplicitSelection: return "BAD_EXPLICIT_SELECTION";
        case ErrorCode::FaceNotQuad: return "FACE_NOT_QUAD";
        case ErrorCode::BoundaryNotSimple: return "BOUNDARY_NOT_SIMPLE";
        case ErrorCode::DiagonalExists: return "DIAGONAL_EXISTS";
        case ErrorCode::BadParameter: return "BAD_PARAMETER";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::ValidationFailed: return "VALIDATION_FAILED";
        case ErrorCode::IoError: return "IO_ERROR";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace onep
