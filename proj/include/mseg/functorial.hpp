#pragma once

#include <map>
#include <string>

#include "mseg/rep.hpp"
#include "mseg/segment.hpp"

namespace mseg {

/// TypeI: d base-field cuspidals SmallF(j) all base-changing to one FixedE.
/// TypeII: d extension-field cuspidals SmallE(j) all inducing to one FixedF.
enum class OrbitKind { TypeI, TypeII };

struct OrbitDatum {
  std::string name;
  int k = 1;
  OrbitKind kind = OrbitKind::TypeI;
};

/// A cyclic extension of prime degree d together with the cuspidal orbits
/// the calculations are allowed to touch.
class ExtensionContext {
 public:
  /// Throws BadContext unless d is prime.
  explicit ExtensionContext(int d);

  /// Throws BadContext on a duplicate name or k < 1.
  void register_orbit(OrbitDatum orbit);

  int degree() const noexcept { return d_; }
  const std::map<std::string, OrbitDatum>& orbits() const noexcept { return orbits_; }
  /// Throws UnknownOrbit.
  const OrbitDatum& orbit(const std::string& name) const;

  // Atom factories; each throws UnknownOrbit or BadContext on a kind mismatch.
  CuspidalAtom small_f(const std::string& orbit, int j) const;
  CuspidalAtom fixed_e(const std::string& orbit) const;
  CuspidalAtom small_e(const std::string& orbit, int j) const;
  CuspidalAtom fixed_f(const std::string& orbit) const;

  /// Throws UnregisteredAtom when `atom` is Plain or does not match a
  /// registered orbit (kind, side, index range, dimension).
  const OrbitDatum& validate(const CuspidalAtom& atom) const;

 private:
  int d_;
  std::map<std::string, OrbitDatum> orbits_;
};

bool is_prime(int n) noexcept;

/// Twist by kappa^j: SmallF indices shift by j mod d, FixedF is fixed.
Rep kappa_twist(const Rep& r, int j, const ExtensionContext& ctx);
/// Twist by gamma^j: SmallE indices shift by j mod d, FixedE is fixed.
Rep galois_twist(const Rep& r, int j, const ExtensionContext& ctx);

/// Base change. Throws UnregisteredAtom, WrongFieldSide, or NotFactorwise
/// when two factors would land on a common line.
Rep bc(const Rep& r, const ExtensionContext& ctx);
/// Automorphic induction; same error contract as bc.
Rep ai(const Rep& r, const ExtensionContext& ctx);

}  // namespace mseg
