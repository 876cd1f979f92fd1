#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semipath/errors.hpp"
#include "semipath/semigroup.hpp"

namespace semipath {

enum class Step : unsigned char { Up, Right };

/// A Dyck path of order n: a lattice path from (0,0) to (n,n) made of up and
/// right unit steps that never goes below the diagonal x = y. Construction
/// always validates; an instance is a valid path by definition.
class DyckPath {
public:
    /// Parses an 'U'/'R' string (empty string = order-0 path) and validates.
    /// Throws PathParseError on a bad character, InvalidPathError when the
    /// steps do not form a Dyck path.
    static DyckPath from_string(std::string_view text);

    /// Validates a raw step sequence. Throws InvalidPathError with kind
    /// OddLength, Unbalanced, or BelowDiagonal(prefix length).
    static DyckPath from_steps(std::vector<Step> steps);

    int order() const { return static_cast<int>(steps_.size() / 2); }

    const std::vector<Step>& steps() const { return steps_; }

    /// Step i for 1 <= i <= 2 * order(), matching the e(i) indexing.
    Step step(int i) const { return steps_[static_cast<std::size_t>(i) - 1]; }

    /// Serializes as uppercase 'U'/'R' with no separators.
    std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    std::vector<Step> steps_;
};

/// Witness that the candidate member set of a path is not closed under
/// addition: a and b are candidate members but a + b is not.
struct ClosureWitness {
    int a = 0;
    int b = 0;
    friend bool operator==(const ClosureWitness&, const ClosureWitness&) = default;
};

/// Witness that a path cannot be the image of any semigroup for a structural
/// reason: the shortest prefix length at which this is already decided.
struct StructuralWitness {
    std::size_t prefix_index = 0;
    friend bool operator==(const StructuralWitness&, const StructuralWitness&) = default;
};

/// Result of attempting to invert a path back to a semigroup. Holds either
/// the decoded semigroup or exactly one rejection witness.
class PathDecodeOutcome {
public:
    static PathDecodeOutcome accept(NumericalSemigroup s) {
        return PathDecodeOutcome(std::move(s));
    }
    static PathDecodeOutcome reject(ClosureWitness w) { return PathDecodeOutcome(w); }
    static PathDecodeOutcome reject(StructuralWitness w) { return PathDecodeOutcome(w); }

    bool accepted() const { return std::holds_alternative<NumericalSemigroup>(value_); }
    const NumericalSemigroup& semigroup() const { return std::get<NumericalSemigroup>(value_); }

    bool rejected_for_closure() const { return std::holds_alternative<ClosureWitness>(value_); }
    ClosureWitness closure_witness() const { return std::get<ClosureWitness>(value_); }

    bool rejected_structurally() const {
        return std::holds_alternative<StructuralWitness>(value_);
    }
    StructuralWitness structural_witness() const { return std::get<StructuralWitness>(value_); }

private:
    template <typename T>
    explicit PathDecodeOutcome(T v) : value_(std::move(v)) {}

    std::variant<NumericalSemigroup, ClosureWitness, StructuralWitness> value_;
};

/// The square diagram of a semigroup: the path whose i-th step, 1 <= i <= 2g,
/// goes right when i is in the semigroup and up when i is a gap. Always a
/// Dyck path of order equal to the genus.
DyckPath tau(const NumericalSemigroup& s);

/// Partial inverse of tau. Builds the candidate member set
/// {0} + {i in [1,2n] : step i is Right} + (2n, inf) and accepts iff it is
/// closed under addition on [0, 2n] and the induced semigroup has genus
/// exactly n. A rejection is a value, not an error. Paths of order beyond
/// kMaxGenus throw GenusOutOfRangeError.
PathDecodeOutcome decode(const DyckPath& p);

/// Number of unit cells of the order-n square strictly above the path.
/// Equals the weight of the decoded semigroup whenever decode accepts.
long long area_above(const DyckPath& p);

/// True iff the intersection of the path with the square spanned by (0,0)
/// and (g-1,g-1) is invariant under the reflection (x,y) -> (g-1-y, g-1-x),
/// compared as sets of lattice points. Order 0 returns true by convention.
bool is_antidiagonal_symmetric(const DyckPath& p);

} // namespace semipath
