#include "semipath/render.hpp"

#include <vector>

namespace semipath {

// Cell convention: an up step leaving (x, y) marks cell (x, y), the cell to
// its right; a right step leaving (x, y) marks cell (x, y-1), the cell below
// it. Steps are painted in path order, so at an up-then-right corner the '>'
// wins. Both cells always fall inside the g x g grid for a Dyck path.
std::string render_square_diagram(const NumericalSemigroup& s, bool antidiagonal) {
    const int g = s.genus();
    if (g == 0) return "(empty diagram)\n";

    std::vector<std::string> rows(g, std::string(g, '.'));
    if (antidiagonal) {
        // Reflection axis of the square spanned by (0,0) and (g-1, g-1):
        // the cells crossed by the segment from (0, g-1) to (g-1, 0).
        for (int k = 0; k <= g - 2; ++k) rows[g - 2 - k][k] = '\\';
    }

    int x = 0;
    int y = 0;
    for (int i = 1; i <= 2 * g; ++i) {
        if (s.contains(i)) {
            rows[y - 1][x] = '>';
            ++x;
        } else {
            rows[y][x] = '^';
            ++y;
        }
    }

    std::string out;
    out.reserve(static_cast<std::size_t>(g) * (g + 1));
    for (int row = g - 1; row >= 0; --row) {
        out += rows[row];
        out += '\n';
    }
    return out;
}

} // namespace semipath
