#pragma once

#include "mseg/rep.hpp"
#include "mseg/segment.hpp"

namespace mseg {

/// Zelevinsky involution m -> m^t (so that L(m^t) = Z(m)), computed with the
/// Moeglin-Waldspurger recursion on each cuspidal line separately.
Multisegment mw_dual(const Multisegment& m);

enum class DualMode {
  /// pi -> pi^t: swap L and Z, keep every multisegment.
  SwapFlag,
  /// Same representation in the other classification: L(m) -> Z(m^t), Z(m) -> L(m^t).
  Normalize,
};

Rep dual_presentation(const Rep& r, DualMode mode);

/// pi^t written in Langlands form.
Rep zelevinsky_dual(const Rep& r);

}  // namespace mseg
