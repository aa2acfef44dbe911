#pragma once

#include <vector>

#include "lfl/laurent_poly.hpp"

namespace lfl {

using Partition = std::vector<long>;
/// Rows of a tableau, top to bottom (English notation).
using Tableau = std::vector<std::vector<int>>;

/// All semistandard tableaux of shape `shape` and content `content`.
std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content);

/// Reading word: rows bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux-Schutzenberger charge of a word with partition content.
long charge(const std::vector<int>& word);

/// K_{shape,content}(t) = sum over SSYT of t^{charge}. Zero unless |shape| = |content|.
LaurentPoly kostka_foulkes(const Partition& shape, const Partition& content);

}  // namespace lfl
