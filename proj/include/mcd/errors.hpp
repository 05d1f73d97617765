#pragma once

#include <stdexcept>
#include <string>

namespace mcd {

// Exit-code categories used by the CLI: 0 ok, 1 parse, 2 validate, 3 engine, 4 io.
enum class ErrorKind { Parse = 1, Validate = 2, Engine = 3, Io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define MCD_ERROR_TYPE(Name, Kind)                                                  \
    class Name : public Error {                                                     \
    public:                                                                          \
        explicit Name(const std::string& what = #Name) : Error(ErrorKind::Kind, what) {} \
    }

MCD_ERROR_TYPE(ParallelLines, Engine);
MCD_ERROR_TYPE(CoincidentLines, Engine);
MCD_ERROR_TYPE(DegenerateSegment, Validate);
MCD_ERROR_TYPE(DegenerateInput, Validate);
MCD_ERROR_TYPE(LineThroughVertexParallel, Engine);
MCD_ERROR_TYPE(SelfIntersecting, Validate);
MCD_ERROR_TYPE(HoleOutsideOuter, Validate);
MCD_ERROR_TYPE(TooFewVertices, Validate);
MCD_ERROR_TYPE(NotConvex, Validate);
MCD_ERROR_TYPE(DomainError, Engine);
MCD_ERROR_TYPE(RootFindingFailure, Engine);
MCD_ERROR_TYPE(ParseError, Parse);
MCD_ERROR_TYPE(IoError, Io);

#undef MCD_ERROR_TYPE

} // namespace mcd
