#pragma once

#include <vector>

#include "qtrsk/growth.hpp"

namespace qtrsk {

enum class DualRskVariant { Column, Row };

// Column insertion: k replaces the bottom-most entry >= k of a column, or goes on top.
Tableau column_insert(const Tableau& t, int k);
// Row insertion: k replaces the left-most entry > k of a row, or goes at the end.
Tableau row_insert(const Tableau& t, int k);

// The biword reads each column top to bottom (column variant) or bottom to top (row variant).
TableauPair classical_dual_rsk(const Matrix01& a, DualRskVariant variant);

// Simultaneous insertion of strictly increasing values into an SSYT through the
// insertion queue: at step i every queued i is placed into the cells of the new
// shape chosen by the local rule, and the entries they replace are queued.
Distribution<Tableau> growth_insert(const Tableau& t, const std::vector<int>& values, GrowthRule rule,
                                    const Mode& mode = Mode::qt());
// The single outcome of a classical rule.
Tableau growth_insert_deterministic(const Tableau& t, const std::vector<int>& values, GrowthRule rule);

// Insertion of a single value by the word rule: i goes to a cell of U^(k+1,1), a
// bumped z is reinserted through U^(k,1).
Distribution<Tableau> qrst_word_insert(const Tableau& t, int i, const Mode& mode = Mode::qt());

}  // namespace qtrsk
