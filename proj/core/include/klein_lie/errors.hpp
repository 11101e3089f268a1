#pragma once

#include <stdexcept>
#include <string>

namespace klein_lie {

// Base for all precondition / domain failures raised by the library.
// Validation outcomes (axiom checks, Hopf reports, ...) are returned as
// report values, not exceptions; exceptions are reserved for misuse.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MixedAlgebras : public Error {
public:
    MixedAlgebras() : Error("elements belong to different algebras") {}
};

class NotHomogeneous : public Error {
public:
    explicit NotHomogeneous(const std::string& what = "element is not homogeneous")
        : Error(what) {}
};

class NotSquare : public Error {
public:
    NotSquare() : Error("matrix is not square") {}
};

class Degenerate : public Error {
public:
    Degenerate() : Error("bilinear form is degenerate") {}
};

class GroupTooLarge : public Error {
public:
    GroupTooLarge() : Error("grade group rank exceeds the brute-force bound") {}
};

class NotAnIdeal : public Error {
public:
    NotAnIdeal() : Error("subspace is not an ideal") {}
};

class NotGradedIdeal : public Error {
public:
    NotGradedIdeal() : Error("subspace is not a graded ideal") {}
};

class NotTriviallyGraded : public Error {
public:
    NotTriviallyGraded() : Error("operation requires a trivially graded algebra") {}
};

class NotSimple : public Error {
public:
    explicit NotSimple(const std::string& what) : Error(what) {}
};

class NotADerivation : public Error {
public:
    NotADerivation() : Error("map does not satisfy the derivation identity") {}
};

class NegativeWeight : public Error {
public:
    NegativeWeight() : Error("module weight must be nonnegative") {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange() : Error("index outside the supported range") {}
};

class BoundExceeded : public Error {
public:
    BoundExceeded() : Error("requested degree exceeds the configured bound") {}
};

class ClosureFailure : public Error {
public:
    explicit ClosureFailure(const std::string& what) : Error(what) {}
};

class NotARepresentation : public Error {
public:
    explicit NotARepresentation(const std::string& what) : Error(what) {}
};

class NotAMorphism : public Error {
public:
    explicit NotAMorphism(const std::string& what) : Error(what) {}
};

}  // namespace klein_lie
