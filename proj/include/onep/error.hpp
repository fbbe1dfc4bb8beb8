#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onep {

enum class ErrorCode {
    // structural validation
    NotConnected,
    BadInvolution,
    BadReference,
    PositiveGenus,
    FakeDegreeNot4,
    FakeNotTransversal,
    FakeFacesNotDistinct,
    EdgeMulticrossed,
    AdjacentEdgesCross,
    NotSimple,
    // operation errors
    UnknownVertex,
    UnknownEdge,
    UnknownFace,
    Disconnected,
    NotTriangulation,
    NotMaximal,
    BadExplicitSelection,
    FaceNotQuad,
    BoundaryNotSimple,
    DiagonalExists,
    BadParameter,
    ParseError,
    ValidationFailed,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace onep
