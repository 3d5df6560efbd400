#pragma once

#include <functional>
#include <vector>

#include "tabcrystal/tableau.hpp"

namespace tabcrystal {

/// Bender-Knuth involution exchanging the free i's and (i+1)'s of each row.
/// Works on skew shapes as well.
Tableau bk(const Tableau& t, int i);

/// Picks the inner corner (0-based row) to slide into next.
using CornerChooser = std::function<int(const std::vector<int>& corner_rows)>;

/// One inward jeu-de-taquin slide into the inner corner at row `corner_row`.
Tableau jdt_slide(const Tableau& s, int corner_row);

/// Rectification by inward slides, always into the lowest inner corner.
Tableau rectify(const Tableau& s);
/// Rectification with a caller-chosen slide order.
Tableau rectify(const Tableau& s, const CornerChooser& choose);

/// Schutzenberger involution on the alphabet 1..i, computed as the nested
/// Bender-Knuth word (b_1)(b_2 b_1)...(b_{i-1}...b_1).
Tableau evacuation(const Tableau& t, int i);

/// Same involution by rotating 180 degrees, complementing j -> i+1-j and
/// rectifying.
Tableau evacuation_oracle(const Tableau& t, int i);

/// Evacuates the sub-tableau of entries <= i on 1..i; larger entries stay.
Tableau partial_xi(const Tableau& t, int i);

/// J = xi_k o xi_{k-1}.
Tableau promotion(const Tableau& t, int k);

/// b_{k-1} o ... o b_1 (b_1 applied first).
Tableau bk_composite(const Tableau& t, int k);

}  // namespace tabcrystal
