#pragma once

#include "qtk/partition.hpp"
#include "qtk/qtpoly.hpp"
#include "qtk/schur.hpp"
#include "qtk/tableau.hpp"

#include <string_view>

namespace qtk::test {

inline Partition P(std::string_view text) { return Partition::parse(text); }
inline Tableau T(std::string_view text) { return Tableau::parse(text); }
inline SchurExpansion s(std::string_view lambda) { return schur(Partition::parse(lambda)); }

inline const QTPoly q = QTPoly::q();
inline const QTPoly t = QTPoly::t();

} // namespace qtk::test
