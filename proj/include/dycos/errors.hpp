#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dycos {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownNodeError : Error {
    explicit UnknownNodeError(std::uint64_t id)
        : Error("unknown node id " + std::to_string(id)) {}
    explicit UnknownNodeError(const std::string& id) : Error("unknown node id '" + id + "'") {}
};

struct UnknownEdgeError : Error {
    UnknownEdgeError(std::uint64_t from, std::uint64_t to)
        : Error("unknown edge (" + std::to_string(from) + ", " + std::to_string(to) + ")") {}
};

struct NoLabeledNodesError : Error {
    NoLabeledNodesError() : Error("graph has no labeled nodes") {}
};

struct AlreadyLabeledError : Error {
    explicit AlreadyLabeledError(std::uint64_t id)
        : Error("node " + std::to_string(id) + " is already labeled") {}
};

struct ZeroTotalError : Error {
    ZeroTotalError() : Error("word statistics have zero total count") {}
};

struct EmptyCorpusError : Error {
    EmptyCorpusError() : Error("no sampled labeled node has any text") {}
};

struct TooFewLabeledNodesError : Error {
    TooFewLabeledNodesError(std::size_t labeled, std::size_t k)
        : Error("cannot split " + std::to_string(labeled) + " labeled nodes into " +
                std::to_string(k) + " folds") {}
};

struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& reason)
        : Error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
    std::size_t line;
};

struct OutOfOrderEventError : Error {
    OutOfOrderEventError(std::size_t line_no, std::int64_t t_prev, std::int64_t t_now)
        : Error("line " + std::to_string(line_no) + ": event timestamp " + std::to_string(t_now) +
                " precedes " + std::to_string(t_prev)),
          line(line_no) {}
    std::size_t line;
};

struct InvalidSpecError : Error {
    using Error::Error;
};

}  // namespace dycos
