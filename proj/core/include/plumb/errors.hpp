#pragma once

#include <stdexcept>
#include <string>

namespace plumb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct EmptyGraphError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct IllegalMoveError : Error { using Error::Error; };
struct InvalidSiteError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };
struct NotStarError : Error { using Error::Error; };
struct NotReducedError : Error { using Error::Error; };
struct TranscriptionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace plumb
