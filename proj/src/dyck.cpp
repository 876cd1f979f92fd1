#include "semipath/dyck.hpp"

#include <algorithm>
#include <utility>

namespace semipath {

DyckPath DyckPath::from_string(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'U': steps.push_back(Step::Up); break;
        case 'R': steps.push_back(Step::Right); break;
        default: throw PathParseError(text[i], i);
        }
    }
    return from_steps(std::move(steps));
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
    if (steps.size() % 2 != 0)
        throw InvalidPathError(InvalidPathError::Kind::OddLength, steps.size());
    std::size_t ups = 0;
    std::size_t rights = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::Up)
            ++ups;
        else
            ++rights;
        if (rights > ups)
            throw InvalidPathError(InvalidPathError::Kind::BelowDiagonal, i + 1);
    }
    if (ups != rights)
        throw InvalidPathError(InvalidPathError::Kind::Unbalanced, steps.size());
    return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
    std::string s;
    s.reserve(steps_.size());
    for (Step st : steps_) s.push_back(st == Step::Up ? 'U' : 'R');
    return s;
}

DyckPath tau(const NumericalSemigroup& s) {
    const int g = s.genus();
    std::vector<Step> steps;
    steps.reserve(2 * g);
    for (int i = 1; i <= 2 * g; ++i)
        steps.push_back(s.contains(i) ? Step::Right : Step::Up);
    // from_steps re-checks the Dyck property, which holds for every semigroup.
    return DyckPath::from_steps(std::move(steps));
}

PathDecodeOutcome decode(const DyckPath& p) {
    const int n = p.order();
    if (n > kMaxGenus) throw GenusOutOfRangeError(n, kMaxGenus);

    // Candidate member set over the window [0, 2n]; everything past 2n is
    // implicitly a member.
    std::uint64_t members = 1;
    for (int i = 1; i <= 2 * n; ++i)
        if (p.step(i) == Step::Right) members |= 1ull << i;

    auto is_member = [&](int v) { return (members >> v) & 1u; };
    for (int a = 1; 2 * a <= 2 * n; ++a) {
        if (!is_member(a)) continue;
        for (int b = a; a + b <= 2 * n; ++b)
            if (is_member(b) && !is_member(a + b))
                return PathDecodeOutcome::reject(ClosureWitness{a, b});
    }

    // The induced semigroup must have genus exactly n: 2n lies past the
    // conductor of any genus-n semigroup, so step 2n has to be Right. For a
    // validated Dyck path this always holds; kept as an explicit contract.
    if (n > 0 && p.step(2 * n) != Step::Right)
        return PathDecodeOutcome::reject(StructuralWitness{static_cast<std::size_t>(2 * n)});

    std::vector<int> gaps;
    for (int i = 1; i <= 2 * n; ++i)
        if (p.step(i) == Step::Up) gaps.push_back(i);
    return PathDecodeOutcome::accept(NumericalSemigroup::from_gaps(std::move(gaps)));
}

long long area_above(const DyckPath& p) {
    const long long n = p.order();
    long long below = 0;
    long long height = 0;
    for (Step st : p.steps()) {
        if (st == Step::Up)
            ++height;
        else
            below += height;
    }
    return n * n - below;
}

bool is_antidiagonal_symmetric(const DyckPath& p) {
    const int g = p.order();
    if (g == 0) return true;

    // Lattice points of the path inside the square [0, g-1] x [0, g-1].
    std::vector<std::pair<int, int>> inside;
    int x = 0;
    int y = 0;
    auto keep = [&] {
        if (x <= g - 1 && y <= g - 1) inside.emplace_back(x, y);
    };
    keep();
    for (Step st : p.steps()) {
        if (st == Step::Up)
            ++y;
        else
            ++x;
        keep();
    }

    std::sort(inside.begin(), inside.end());
    for (auto [px, py] : inside) {
        std::pair<int, int> reflected{g - 1 - py, g - 1 - px};
        if (!std::binary_search(inside.begin(), inside.end(), reflected)) return false;
    }
    return true;
}

} // namespace semipath
