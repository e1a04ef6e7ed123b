#include <gammahom/error.hpp>

namespace gammahom {

auto to_string(Errc code) -> std::string_view
{
    switch (code) {
    case Errc::EmptyDigraph: return "EmptyDigraph";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptyInducedSet: return "EmptyInducedSet";
    case Errc::NotAPoset: return "NotAPoset";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::VertexNotInSubset: return "VertexNotInSubset";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotStrictHom: return "NotStrictHom";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BoundTooLarge: return "BoundTooLarge";
    case Errc::ClassNotQuotientClosed: return "ClassNotQuotientClosed";
    case Errc::DominanceFails: return "DominanceFails";
    case Errc::PremiseFails: return "PremiseFails";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string & message) :
    std::runtime_error(std::string{to_string(code)} + ": " + message),
    _code(code)
{
}

}
