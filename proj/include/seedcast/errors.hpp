#pragma once

#include <stdexcept>
#include <string>

namespace seedcast {

// Base class for all domain errors raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Edge list problems: self-loop, out-of-range id, duplicate edge.
struct BadEdge : Error {
    explicit BadEdge(const std::string& what) : Error(what) {}
};

// Edge list contains a cycle; cyclic topologies go through the general path.
struct CycleDetected : Error {
    explicit CycleDetected(const std::string& what) : Error(what) {}
};

// Seed count does not match component count, or a seed is outside its component.
struct SeedMismatch : Error {
    explicit SeedMismatch(const std::string& what) : Error(what) {}
};

// A tree-only query was asked of a structure with multiple in-links.
struct NotATree : Error {
    explicit NotATree(const std::string& what) : Error(what) {}
};

// Enumeration size limit (agents or directed links) exceeded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Parameter outside its legal domain.
struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error(what) {}
};

// Path position index outside 1..I.
struct BadIndex : Error {
    explicit BadIndex(const std::string& what) : Error(what) {}
};

// Conditioning event has probability zero.
struct ConditionOnNull : Error {
    explicit ConditionOnNull(const std::string& what) : Error(what) {}
};

// The belief iteration cycled without reaching a fixed point.
struct NonStabilizing : Error {
    explicit NonStabilizing(const std::string& what) : Error(what) {}
};

// An operation was invoked outside its stated precondition.
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

// Cost lies outside the window in which the requested claim applies.
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

// Two structures of different agent counts were compared.
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

}  // namespace seedcast
