#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gammahom {

enum class Errc {
    EmptyDigraph,
    VertexOutOfRange,
    EmptyInducedSet,
    NotAPoset,
    NotSymmetric,
    VertexNotInSubset,
    ArityMismatch,
    NotAHomomorphism,
    NotStrictHom,
    TooLarge,
    BoundTooLarge,
    ClassNotQuotientClosed,
    DominanceFails,
    PremiseFails,
    InvalidSpec,
    NotAWalk,
    ParseError,
};

auto to_string(Errc code) -> std::string_view;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & message);

    auto code() const noexcept -> Errc { return _code; }

private:
    Errc _code;
};

}
