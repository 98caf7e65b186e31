#include "mseg/batch.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "mseg/error.hpp"
#include "mseg/fiber.hpp"
#include "mseg/text.hpp"

namespace mseg {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& msg) {
  throw Error(ErrorCode::BadContext, "batch line " + std::to_string(lineno) + ": " + msg);
}

std::vector<int> parse_degrees(const std::string& value, int lineno) {
  std::vector<int> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      bad_line(lineno, "bad degree '" + item + "'");
    }
    if (!is_prime(out.back())) bad_line(lineno, "degree " + item + " is not prime");
  }
  if (out.empty()) bad_line(lineno, "empty degree list");
  return out;
}

int to_int(const std::string& value, int lineno) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    bad_line(lineno, "bad integer '" + value + "'");
  }
}

// key=value fields up to the first token that is not of that form.
std::map<std::string, std::string> fields(std::istringstream& words, std::string* rest) {
  std::map<std::string, std::string> out;
  std::string token;
  while (words >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || token.front() == '{') {
      std::string tail;
      std::getline(words, tail);
      *rest = token + tail;
      break;
    }
    out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

ExtensionContext context_for(const OrbitDatum& orbit, int d) {
  ExtensionContext ctx(d);
  ctx.register_orbit(orbit);
  return ctx;
}

CuspidalLine target_line(const ExtensionContext& ctx, const OrbitDatum& orbit) {
  return CuspidalLine{orbit.kind == OrbitKind::TypeI ? ctx.fixed_e(orbit.name) : ctx.fixed_f(orbit.name), Offset{}};
}

BatchRow evaluate(const OrbitDatum& orbit, int d, std::span<const std::pair<int, int>> shape) {
  const auto ctx = context_for(orbit, d);
  const Multisegment m(target_line(ctx, orbit), shape);
  BatchRow row;
  row.s = static_cast<int>(m.size());
  row.d = d;
  row.shape = to_string(m);
  row.shape_hash = fnv1a_hex(row.shape);
  try {
    const auto c = orbit.kind == OrbitKind::TypeI ? count_klyachko_fiber_bc(m, ctx) : count_klyachko_fiber_ai(m, ctx);
    row.r = c.r_target;
    row.fiber_size = c.fiber_size;
    row.d_count = c.d_count;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoKlyachkoModel) throw;
    row.fiber_size = orbit.kind == OrbitKind::TypeI ? enumerate_fiber_bc(m, ctx, [](const FiberElement&) {})
                                                    : enumerate_fiber_ai(m, ctx, [](const FiberElement&) {});
  }
  return row;
}

}  // namespace

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

BatchConfig parse_batch_config(std::string_view text) {
  BatchConfig config;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(lines, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::string rest;
    if (keyword == "orbit") {
      OrbitDatum o;
      if (!(words >> o.name)) bad_line(lineno, "orbit needs a name");
      const auto f = fields(words, &rest);
      if (!f.contains("kind") || !f.contains("k")) bad_line(lineno, "orbit needs kind= and k=");
      if (f.at("kind") == "I")
        o.kind = OrbitKind::TypeI;
      else if (f.at("kind") == "II")
        o.kind = OrbitKind::TypeII;
      else
        bad_line(lineno, "orbit kind must be I or II");
      o.k = to_int(f.at("k"), lineno);
      config.orbits.push_back(std::move(o));
    } else if (keyword == "sweep") {
      const auto f = fields(words, &rest);
      Sweep sw;
      for (const auto& [key, value] : f) {
        if (key == "orbit") {
          sw.orbit = value;
        } else if (key == "d") {
          sw.degrees = parse_degrees(value, lineno);
        } else if (key == "s") {
          const auto dots = value.find("..");
          if (dots == std::string::npos) {
            sw.s_min = sw.s_max = to_int(value, lineno);
          } else {
            sw.s_min = to_int(value.substr(0, dots), lineno);
            sw.s_max = to_int(value.substr(dots + 2), lineno);
          }
        } else if (key == "count") {
          sw.count = to_int(value, lineno);
        } else if (key == "span") {
          sw.span = to_int(value, lineno);
        } else if (key == "extra") {
          sw.max_extra = to_int(value, lineno);
        } else if (key == "seed") {
          sw.seed = static_cast<std::uint64_t>(to_int(value, lineno));
        } else {
          bad_line(lineno, "unknown sweep field '" + key + "'");
        }
      }
      if (sw.orbit.empty() || sw.degrees.empty()) bad_line(lineno, "sweep needs orbit= and d=");
      if (sw.s_min < 0 || sw.s_max < sw.s_min || sw.count < 0 || sw.span < 0 || sw.max_extra < 0)
        bad_line(lineno, "sweep ranges must be non-negative and ordered");
      if (!rest.empty()) bad_line(lineno, "unexpected '" + rest + "'");
      config.sweeps.push_back(std::move(sw));
    } else if (keyword == "shape") {
      const auto f = fields(words, &rest);
      ShapeJob job;
      if (!f.contains("orbit") || !f.contains("d")) bad_line(lineno, "shape needs orbit= and d=");
      job.orbit = f.at("orbit");
      job.degrees = parse_degrees(f.at("d"), lineno);
      if (rest.empty()) bad_line(lineno, "shape needs a {[a,b],...} list");
      // Reuse the multisegment grammar with a throwaway line.
      try {
        job.shape = parse_multisegment(rest + (rest.find('@') == std::string::npos ? "@shape(k=1)" : "")).shape();
      } catch (const Error& e) {
        bad_line(lineno, e.what());
      }
      config.shapes.push_back(std::move(job));
    } else {
      bad_line(lineno, "unknown keyword '" + keyword + "'");
    }
  }
  auto known = [&](const std::string& name) {
    for (const auto& o : config.orbits)
      if (o.name == name) return true;
    return false;
  };
  for (const auto& sw : config.sweeps)
    if (!known(sw.orbit)) throw Error(ErrorCode::UnknownOrbit, "sweep refers to undeclared orbit " + sw.orbit);
  for (const auto& job : config.shapes)
    if (!known(job.orbit)) throw Error(ErrorCode::UnknownOrbit, "shape refers to undeclared orbit " + job.orbit);
  return config;
}

std::vector<BatchRow> run_batch(const BatchConfig& config, std::uint64_t seed_offset) {
  auto orbit_of = [&](const std::string& name) -> const OrbitDatum& {
    for (const auto& o : config.orbits)
      if (o.name == name) return o;
    throw Error(ErrorCode::UnknownOrbit, "undeclared orbit " + name);
  };
  std::vector<BatchRow> rows;
  for (const auto& job : config.shapes)
    for (int d : job.degrees) rows.push_back(evaluate(orbit_of(job.orbit), d, job.shape));
  for (const auto& sw : config.sweeps) {
    std::mt19937_64 rng(sw.seed + seed_offset);
    const auto& orbit = orbit_of(sw.orbit);
    for (int d : sw.degrees)
      for (int s = sw.s_min; s <= sw.s_max; ++s)
        for (int i = 0; i < sw.count; ++i) {
          const auto shape = random_ladder_shape(rng, s, sw.span, sw.max_extra);
          rows.push_back(evaluate(orbit, d, shape));
        }
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const BatchRow> rows) {
  out << "s,d,shape_hash,r,fiber_size,d_count,log_d_ratio\n";
  for (const auto& row : rows) {
    out << row.s << ',' << row.d << ',' << row.shape_hash << ',';
    if (row.r) out << *row.r;
    out << ',' << row.fiber_size << ',';
    if (row.d_count) out << *row.d_count;
    out << ',';
    if (row.d_count && row.s > 0 && *row.d_count > 0) {
      const double ratio = std::log(static_cast<double>(*row.d_count)) / std::log(row.d) / row.s;
      out << std::fixed << std::setprecision(6) << ratio << std::defaultfloat;
    }
    out << '\n';
  }
}

}  // namespace mseg
