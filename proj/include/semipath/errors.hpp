#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semipath {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The complement of the candidate gap set is not closed under addition:
/// a and b are non-gaps but a + b is a gap.
class NotClosedError : public Error {
public:
    NotClosedError(long a, long b)
        : Error("complement not closed under addition: " + std::to_string(a) + " + "
                + std::to_string(b) + " = " + std::to_string(a + b) + " is a gap"),
          a_(a), b_(b) {}

    long a() const { return a_; }
    long b() const { return b_; }

private:
    long a_;
    long b_;
};

/// The generators have gcd != 1, so the generated monoid has infinite complement.
class NotCofiniteError : public Error {
public:
    explicit NotCofiniteError(long gcd)
        : Error("generators have gcd " + std::to_string(gcd)
                + ", complement would be infinite"),
          gcd_(gcd) {}

    long gcd() const { return gcd_; }

private:
    long gcd_;
};

/// Genus outside the supported range [0, kMaxGenus].
class GenusOutOfRangeError : public Error {
public:
    GenusOutOfRangeError(long genus, long max_allowed)
        : Error("genus " + std::to_string(genus) + " outside supported range [0, "
                + std::to_string(max_allowed) + "]"),
          genus_(genus), max_allowed_(max_allowed) {}

    long genus() const { return genus_; }
    long max_allowed() const { return max_allowed_; }

private:
    long genus_;
    long max_allowed_;
};

/// A character other than 'U' or 'R' in a path string.
class PathParseError : public Error {
public:
    PathParseError(char c, std::size_t index)
        : Error("invalid path character '" + std::string(1, c) + "' at index "
                + std::to_string(index)),
          character_(c), index_(index) {}

    char character() const { return character_; }
    std::size_t index() const { return index_; }

private:
    char character_;
    std::size_t index_;
};

/// A step sequence that is not a Dyck path.
class InvalidPathError : public Error {
public:
    enum class Kind { OddLength, Unbalanced, BelowDiagonal };

    InvalidPathError(Kind kind, std::size_t prefix_index)
        : Error(describe(kind, prefix_index)), kind_(kind), prefix_index_(prefix_index) {}

    Kind kind() const { return kind_; }

    /// For BelowDiagonal: length of the shortest offending prefix.
    std::size_t prefix_index() const { return prefix_index_; }

private:
    static std::string describe(Kind kind, std::size_t prefix_index) {
        switch (kind) {
        case Kind::OddLength: return "path has odd length";
        case Kind::Unbalanced: return "path has unequal numbers of up and right steps";
        case Kind::BelowDiagonal:
            return "path goes below the diagonal at prefix length "
                   + std::to_string(prefix_index);
        }
        return "invalid path";
    }

    Kind kind_;
    std::size_t prefix_index_;
};

} // namespace semipath
