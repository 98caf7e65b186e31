#include "mseg/functorial.hpp"

#include <algorithm>

#include "mseg/error.hpp"

namespace mseg {

namespace {

std::string kind_label(OrbitKind kind) { return kind == OrbitKind::TypeI ? "I" : "II"; }

bool is_small(const CuspidalAtom& atom) { return std::holds_alternative<SmallOrbitMember>(atom.role); }

const std::string& orbit_name(const CuspidalAtom& atom) {
  if (const auto* s = std::get_if<SmallOrbitMember>(&atom.role)) return s->orbit;
  return std::get<FixedBig>(atom.role).orbit;
}

CuspidalLine with_atom(const CuspidalLine& line, CuspidalAtom atom) { return CuspidalLine{std::move(atom), line.offset}; }

Rep assemble(std::vector<RepFactor> factors, const char* what) {
  std::vector<CuspidalLine> lines;
  for (const auto& f : factors)
    if (!f.m.empty()) lines.push_back(f.line());
  std::sort(lines.begin(), lines.end());
  if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    throw Error(ErrorCode::NotFactorwise,
                std::string(what) + " sends two factors onto one cuspidal line; the image is not computed factorwise");
  return Rep(std::move(factors));
}

// Shared body of bc and ai. `from` is the side being mapped; small atoms of
// the "collapsing" orbit kind go to the fixed atom, fixed atoms of the other
// kind split into d small ones.
Rep transfer(const Rep& r, const ExtensionContext& ctx, Field from, const char* what) {
  const OrbitKind collapsing = from == Field::Base ? OrbitKind::TypeI : OrbitKind::TypeII;
  std::vector<RepFactor> out;
  for (const auto& f : r.factors()) {
    const auto& line = f.line();
    const OrbitDatum& orbit = ctx.validate(line.atom);
    if (line.atom.side != from)
      throw Error(ErrorCode::WrongFieldSide, std::string(what) + " expects representations over the " +
                                                 (from == Field::Base ? "base" : "extension") + " field");
    if (is_small(line.atom)) {
      // validate() guarantees the orbit kind matches the side here.
      CuspidalAtom target = collapsing == OrbitKind::TypeI ? ctx.fixed_e(orbit.name) : ctx.fixed_f(orbit.name);
      out.push_back(RepFactor{f.presentation, relocate(f.m, with_atom(line, std::move(target)))});
    } else {
      for (int j = 0; j < ctx.degree(); ++j) {
        CuspidalAtom target = collapsing == OrbitKind::TypeI ? ctx.small_e(orbit.name, j) : ctx.small_f(orbit.name, j);
        out.push_back(RepFactor{f.presentation, relocate(f.m, with_atom(line, std::move(target)))});
      }
    }
  }
  return assemble(std::move(out), what);
}

Rep twist(const Rep& r, int j, const ExtensionContext& ctx, Field side, const char* what) {
  std::vector<RepFactor> out;
  for (const auto& f : r.factors()) {
    const auto& line = f.line();
    ctx.validate(line.atom);
    if (line.atom.side != side)
      throw Error(ErrorCode::WrongFieldSide, std::string(what) + " applies to the " +
                                                 (side == Field::Base ? "base" : "extension") + " field only");
    CuspidalAtom atom = line.atom;
    if (auto* s = std::get_if<SmallOrbitMember>(&atom.role)) {
      const int d = ctx.degree();
      s->index = ((s->index + j) % d + d) % d;
    }
    out.push_back(RepFactor{f.presentation, relocate(f.m, with_atom(line, std::move(atom)))});
  }
  return Rep(std::move(out), r.irreducibility());
}

}  // namespace

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

ExtensionContext::ExtensionContext(int d) : d_(d) {
  if (!is_prime(d)) throw Error(ErrorCode::BadContext, "extension degree " + std::to_string(d) + " is not prime");
}

void ExtensionContext::register_orbit(OrbitDatum orbit) {
  if (orbit.k < 1) throw Error(ErrorCode::BadContext, "orbit " + orbit.name + " needs k >= 1");
  if (orbit.name.empty()) throw Error(ErrorCode::BadContext, "orbit name is empty");
  auto name = orbit.name;
  if (!orbits_.emplace(name, std::move(orbit)).second)
    throw Error(ErrorCode::BadContext, "orbit " + name + " declared twice");
}

const OrbitDatum& ExtensionContext::orbit(const std::string& name) const {
  auto it = orbits_.find(name);
  if (it == orbits_.end()) throw Error(ErrorCode::UnknownOrbit, "unknown orbit " + name);
  return it->second;
}

namespace {

const OrbitDatum& of_kind(const ExtensionContext& ctx, const std::string& name, OrbitKind kind) {
  const auto& o = ctx.orbit(name);
  if (o.kind != kind)
    throw Error(ErrorCode::BadContext, "orbit " + name + " is of kind " + kind_label(o.kind));
  return o;
}

void check_index(const ExtensionContext& ctx, int j) {
  if (j < 0 || j >= ctx.degree())
    throw Error(ErrorCode::BadContext, "orbit index " + std::to_string(j) + " outside 0.." +
                                           std::to_string(ctx.degree() - 1));
}

}  // namespace

CuspidalAtom ExtensionContext::small_f(const std::string& name, int j) const {
  const auto& o = of_kind(*this, name, OrbitKind::TypeI);
  check_index(*this, j);
  return CuspidalAtom{name, o.k, Field::Base, SmallOrbitMember{name, j}};
}

CuspidalAtom ExtensionContext::fixed_e(const std::string& name) const {
  const auto& o = of_kind(*this, name, OrbitKind::TypeI);
  return CuspidalAtom{name, o.k, Field::Extension, FixedBig{name}};
}

CuspidalAtom ExtensionContext::small_e(const std::string& name, int j) const {
  const auto& o = of_kind(*this, name, OrbitKind::TypeII);
  check_index(*this, j);
  return CuspidalAtom{name, o.k, Field::Extension, SmallOrbitMember{name, j}};
}

CuspidalAtom ExtensionContext::fixed_f(const std::string& name) const {
  const auto& o = of_kind(*this, name, OrbitKind::TypeII);
  return CuspidalAtom{name, o.k * d_, Field::Base, FixedBig{name}};
}

const OrbitDatum& ExtensionContext::validate(const CuspidalAtom& atom) const {
  if (std::holds_alternative<Plain>(atom.role))
    throw Error(ErrorCode::UnregisteredAtom, "cuspidal " + atom.name + " belongs to no declared orbit");
  const auto& name = orbit_name(atom);
  auto it = orbits_.find(name);
  if (it == orbits_.end()) throw Error(ErrorCode::UnregisteredAtom, "orbit " + name + " is not registered");
  const OrbitDatum& o = it->second;
  std::optional<CuspidalAtom> expected;
  try {
    if (const auto* s = std::get_if<SmallOrbitMember>(&atom.role))
      expected = o.kind == OrbitKind::TypeI ? small_f(name, s->index) : small_e(name, s->index);
    else
      expected = o.kind == OrbitKind::TypeI ? fixed_e(name) : fixed_f(name);
  } catch (const Error&) {
    expected.reset();
  }
  if (!expected || *expected != atom)
    throw Error(ErrorCode::UnregisteredAtom, "cuspidal " + atom.name + " does not match orbit " + name +
                                                 " (kind " + kind_label(o.kind) + ", k=" + std::to_string(o.k) + ")");
  return o;
}

Rep kappa_twist(const Rep& r, int j, const ExtensionContext& ctx) {
  return twist(r, j, ctx, Field::Base, "kappa twist");
}

Rep galois_twist(const Rep& r, int j, const ExtensionContext& ctx) {
  return twist(r, j, ctx, Field::Extension, "Galois twist");
}

Rep bc(const Rep& r, const ExtensionContext& ctx) { return transfer(r, ctx, Field::Base, "base change"); }

Rep ai(const Rep& r, const ExtensionContext& ctx) {
  return transfer(r, ctx, Field::Extension, "automorphic induction");
}

}  // namespace mseg
