#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mseg/functorial.hpp"
#include "mseg/rep.hpp"

namespace mseg {

/// One preimage: segment i of the target (in standard order) is placed on
/// the small line with index assignment[i].
struct FiberElement {
  std::vector<int> assignment;
  std::vector<Multisegment> parts;  // d parts, possibly empty, on the small lines
  Rep rep;
};

using FiberVisitor = std::function<void(const FiberElement&)>;

/// Preimages under bc of L(m) for m on a FixedE line of a TypeI orbit.
/// Assignments are visited in lexicographic order; assignments that only
/// permute identical segments are visited once. Returns the number visited.
/// Throws WrongLineKind.
std::uint64_t enumerate_fiber_bc(const Multisegment& m, const ExtensionContext& ctx,
                                 const FiberVisitor& visit);
/// Preimages under ai of L(m) for m on a FixedF line of a TypeII orbit.
std::uint64_t enumerate_fiber_ai(const Multisegment& m, const ExtensionContext& ctx,
                                 const FiberVisitor& visit);

std::vector<FiberElement> fiber_bc(const Multisegment& m, const ExtensionContext& ctx);
std::vector<FiberElement> fiber_ai(const Multisegment& m, const ExtensionContext& ctx);

struct FiberCount {
  std::uint64_t fiber_size = 0;
  std::uint64_t d_count = 0;
  /// r(Pi) for bc; r(Pi)/d for ai.
  std::int64_t r_target = 0;
};

/// Number of preimages whose Klyachko type is exactly r(Pi).
/// Throws WrongLineKind, NotALadder, NoKlyachkoModel.
FiberCount count_klyachko_fiber_bc(const Multisegment& m, const ExtensionContext& ctx);
/// Number of preimages of type r(Pi)/d. Additionally throws IndivisibleType.
FiberCount count_klyachko_fiber_ai(const Multisegment& m, const ExtensionContext& ctx);

/// Closed form for a Speh target with s segments: d^{s/2} for even s,
/// (s'+1) d^{s'+1} - s' d^{s'} for s = 2s'+1.
std::int64_t speh_count_formula(int s, int d);

}  // namespace mseg
