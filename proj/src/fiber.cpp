#include "mseg/fiber.hpp"

#include "mseg/error.hpp"
#include "mseg/klyachko.hpp"

namespace mseg {

namespace {

struct FiberSetup {
  std::vector<Segment> segments;  // standard order, identical ones adjacent
  std::vector<CuspidalLine> small_lines;
  int small_dim = 1;
  int target_dim = 1;
};

// Checks that m sits on the fixed line of an orbit of `kind` on `side` and
// lists the d small lines of its fiber.
FiberSetup setup(const Multisegment& m, const ExtensionContext& ctx, OrbitKind kind, Field side) {
  FiberSetup out;
  const int d = ctx.degree();
  out.segments.assign(m.segments().begin(), m.segments().end());
  if (m.empty()) return out;
  const CuspidalLine& line = m.line();
  const auto* fixed = std::get_if<FixedBig>(&line.atom.role);
  if (fixed == nullptr || line.atom.side != side)
    throw Error(ErrorCode::WrongLineKind, std::string("fiber target must lie on a ") +
                                              (side == Field::Extension ? "FixedE" : "FixedF") + " line");
  const OrbitDatum& orbit = ctx.validate(line.atom);
  if (orbit.kind != kind) throw Error(ErrorCode::WrongLineKind, "orbit " + orbit.name + " has the wrong kind");
  for (int j = 0; j < d; ++j) {
    CuspidalAtom atom = kind == OrbitKind::TypeI ? ctx.small_f(orbit.name, j) : ctx.small_e(orbit.name, j);
    out.small_lines.push_back(CuspidalLine{std::move(atom), line.offset});
  }
  out.small_dim = orbit.k;
  out.target_dim = line.dim_k();
  return out;
}

// Lexicographic walk over class assignments. Runs of identical segments get
// non-decreasing classes so every labeled splitting is produced once.
template <typename F>
std::uint64_t walk_assignments(const std::vector<Segment>& segs, int d, F&& on_assignment) {
  const std::size_t s = segs.size();
  std::vector<int> assignment(s, 0);
  std::uint64_t visited = 0;
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == s) {
      ++visited;
      on_assignment(static_cast<const std::vector<int>&>(assignment));
      return;
    }
    const int lo = (pos > 0 && segs[pos] == segs[pos - 1]) ? assignment[pos - 1] : 0;
    for (int c = lo; c < d; ++c) {
      assignment[pos] = c;
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return visited;
}

std::uint64_t enumerate(const Multisegment& m, const ExtensionContext& ctx, OrbitKind kind, Field side,
                        const FiberVisitor& visit) {
  const FiberSetup st = setup(m, ctx, kind, side);
  const int d = ctx.degree();
  return walk_assignments(st.segments, d, [&](const std::vector<int>& assignment) {
    std::vector<std::vector<Segment>> buckets(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      const auto& seg = st.segments[i];
      buckets[static_cast<std::size_t>(assignment[i])].emplace_back(
          st.small_lines[static_cast<std::size_t>(assignment[i])], seg.a(), seg.b());
    }
    FiberElement el;
    el.assignment = assignment;
    std::vector<RepFactor> factors;
    for (auto& bucket : buckets) {
      el.parts.emplace_back(std::move(bucket));
      if (!el.parts.back().empty()) factors.push_back(RepFactor{Presentation::Langlands, el.parts.back()});
    }
    el.rep = Rep(std::move(factors));
    visit(el);
  });
}

FiberCount count(const Multisegment& m, const ExtensionContext& ctx, OrbitKind kind, Field side) {
  const FiberSetup st = setup(m, ctx, kind, side);
  if (!is_ladder(m)) throw Error(ErrorCode::NotALadder, "Klyachko fiber counts are defined for ladders");
  const auto shape = m.shape();
  const auto r = detail::ladder_type(shape, st.target_dim);
  if (!r) throw Error(ErrorCode::NoKlyachkoModel, "the target admits no Klyachko model");
  const int d = ctx.degree();
  std::int64_t target = *r;
  if (kind == OrbitKind::TypeII) {
    if (target % d != 0)
      throw Error(ErrorCode::IndivisibleType,
                  "Klyachko type " + std::to_string(target) + " is not divisible by " + std::to_string(d));
    target /= d;
  }

  FiberCount out;
  out.r_target = target;
  std::vector<std::vector<std::pair<int, int>>> parts(static_cast<std::size_t>(d));
  out.fiber_size = walk_assignments(st.segments, d, [&](const std::vector<int>& assignment) {
    for (auto& p : parts) p.clear();
    for (std::size_t i = 0; i < assignment.size(); ++i)
      parts[static_cast<std::size_t>(assignment[i])].push_back(shape[i]);
    // Parts live on pairwise distinct lines: the product admits a model iff
    // every part does, with the types adding up.
    std::int64_t total = 0;
    for (const auto& p : parts) {
      const auto part_type = detail::ladder_type(p, st.small_dim);
      if (!part_type) return;
      total += *part_type;
    }
    if (total == target) ++out.d_count;
  });
  return out;
}

}  // namespace

std::uint64_t enumerate_fiber_bc(const Multisegment& m, const ExtensionContext& ctx, const FiberVisitor& visit) {
  return enumerate(m, ctx, OrbitKind::TypeI, Field::Extension, visit);
}

std::uint64_t enumerate_fiber_ai(const Multisegment& m, const ExtensionContext& ctx, const FiberVisitor& visit) {
  return enumerate(m, ctx, OrbitKind::TypeII, Field::Base, visit);
}

std::vector<FiberElement> fiber_bc(const Multisegment& m, const ExtensionContext& ctx) {
  std::vector<FiberElement> out;
  enumerate_fiber_bc(m, ctx, [&](const FiberElement& e) { out.push_back(e); });
  return out;
}

std::vector<FiberElement> fiber_ai(const Multisegment& m, const ExtensionContext& ctx) {
  std::vector<FiberElement> out;
  enumerate_fiber_ai(m, ctx, [&](const FiberElement& e) { out.push_back(e); });
  return out;
}

FiberCount count_klyachko_fiber_bc(const Multisegment& m, const ExtensionContext& ctx) {
  return count(m, ctx, OrbitKind::TypeI, Field::Extension);
}

FiberCount count_klyachko_fiber_ai(const Multisegment& m, const ExtensionContext& ctx) {
  return count(m, ctx, OrbitKind::TypeII, Field::Base);
}

std::int64_t speh_count_formula(int s, int d) {
  if (s < 0 || d < 1) throw std::invalid_argument("speh_count_formula needs s >= 0 and d >= 1");
  auto power = [d](int e) {
    std::int64_t p = 1;
    for (int i = 0; i < e; ++i) p *= d;
    return p;
  };
  if (s % 2 == 0) return power(s / 2);
  const int half = s / 2;
  return (half + 1) * power(half + 1) - half * power(half);
}

}  // namespace mseg
