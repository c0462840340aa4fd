#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trimetric {

// Base type for every domain error raised by the library.  File-format and
// syntax problems use ParseError; everything else corresponds to a failure
// mode of one of the operations and carries the offending labels.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AxiomViolation : public Error {
public:
    // Diagonal/Symmetry/Negativity/Triangle are the pseudometric axioms.
    // Shape, Label and Entry are raised by the matrix parsers for
    // non-square input, bad labels and unusable entries (NaN, garbage).
    enum class Kind { Diagonal, Symmetry, Negativity, Triangle, Shape, Label, Entry };

    AxiomViolation(Kind kind, std::vector<std::string> witness, const std::string& detail)
        : Error(format(kind, witness, detail)), kind_(kind), witness_(std::move(witness)) {}

    Kind kind() const { return kind_; }
    const std::vector<std::string>& witness() const { return witness_; }

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::Diagonal: return "diagonal";
            case Kind::Symmetry: return "symmetry";
            case Kind::Negativity: return "negativity";
            case Kind::Triangle: return "triangle";
            case Kind::Shape: return "shape";
            case Kind::Label: return "label";
            case Kind::Entry: return "entry";
        }
        return "?";
    }

private:
    static std::string format(Kind kind, const std::vector<std::string>& witness,
                              const std::string& detail) {
        std::string msg = "axiom violation (";
        msg += kind_name(kind);
        msg += ")";
        if (!witness.empty()) {
            msg += " at (";
            for (std::size_t i = 0; i < witness.size(); ++i) {
                if (i) msg += ", ";
                msg += witness[i];
            }
            msg += ")";
        }
        if (!detail.empty()) {
            msg += ": ";
            msg += detail;
        }
        return msg;
    }

    Kind kind_;
    std::vector<std::string> witness_;
};

class UnknownPoint : public Error {
public:
    explicit UnknownPoint(const std::string& label) : Error("unknown point: " + label) {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& label) : Error("unknown vertex: " + label) {}
};

class EmptySpace : public Error {
public:
    explicit EmptySpace(const std::string& op) : Error(op + ": empty space") {}
};

class TooSmall : public Error {
public:
    TooSmall(const std::string& op, std::size_t card, std::size_t need)
        : Error(op + ": needs at least " + std::to_string(need) + " points, got " +
                std::to_string(card)) {}
};

class DriftTooNegative : public Error {
public:
    explicit DriftTooNegative(const std::string& point)
        : Error("drift below -underline_d at point " + point), point_(point) {}
    const std::string& point() const { return point_; }

private:
    std::string point_;
};

class SizeBound : public Error {
public:
    SizeBound(std::size_t card, std::size_t bound)
        : Error("isometry search refused: " + std::to_string(card) + " points exceeds bound " +
                std::to_string(bound)) {}
};

class BadDepth : public Error {
public:
    explicit BadDepth(const std::string& what) : Error("bad depth: " + what) {}
};

class BaseMismatch : public Error {
public:
    explicit BaseMismatch(const std::string& what) : Error("base mismatch: " + what) {}
};

class NoLeaves : public Error {
public:
    explicit NoLeaves(const std::string& base_point)
        : Error("component over " + base_point + " has no leaves"), base_point_(base_point) {}
    const std::string& base_point() const { return base_point_; }

private:
    std::string base_point_;
};

class InvalidTree : public Error {
public:
    explicit InvalidTree(const std::string& what) : Error("invalid tree: " + what) {}
};

class InvalidForest : public Error {
public:
    explicit InvalidForest(const std::string& what) : Error("invalid forest: " + what) {}
};

// Unparseable files, malformed JSON, bad numeric literals.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace trimetric
