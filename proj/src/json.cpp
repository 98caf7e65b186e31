#include "mseg/json.hpp"

#include "mseg/error.hpp"
#include "mseg/text.hpp"

namespace mseg {

using nlohmann::json;

json to_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

json to_json(const Composition& c) { return json(std::vector<int>(c.entries().begin(), c.entries().end())); }

json to_json(const CuspidalLine& line) {
  json atom{{"name", line.atom.name},
            {"k", line.atom.dim_k},
            {"side", line.atom.side == Field::Base ? "F" : "E"}};
  if (const auto* s = std::get_if<SmallOrbitMember>(&line.atom.role)) {
    atom["role"] = "small";
    atom["orbit"] = s->orbit;
    atom["index"] = s->index;
  } else if (const auto* f = std::get_if<FixedBig>(&line.atom.role)) {
    atom["role"] = "fixed";
    atom["orbit"] = f->orbit;
  } else {
    atom["role"] = "plain";
  }
  return json{{"atom", atom}, {"offset", to_string(line.offset)}, {"text", to_string(line)}};
}

json to_json(const Multisegment& m) {
  json out = json::array();
  for (const auto& s : m.segments()) out.push_back(json{{"line", to_json(s.line())}, {"a", s.a()}, {"b", s.b()}});
  return out;
}

json to_json(const Rep& r) {
  json factors = json::array();
  for (const auto& f : r.factors())
    factors.push_back(json{{"presentation", f.presentation == Presentation::Langlands ? "L" : "Z"},
                           {"segments", to_json(f.m)}});
  return json{{"factors", factors}, {"degree", r.degree()}, {"text", to_string(r)}};
}

json to_json(const KlyachkoResult& k) {
  switch (k.tag()) {
    case KlyachkoResult::Tag::Admits:
      return json{{"tag", "admits"},
                  {"r", k.r()},
                  {"pairs", std::vector<std::int64_t>(k.pair_labels().begin(), k.pair_labels().end())}};
    case KlyachkoResult::Tag::NoModel:
      return json{{"tag", "no_model"}};
    case KlyachkoResult::Tag::Unknown:
      return json{{"tag", "unknown"}};
  }
  return json{};
}

json to_json(const ExactMatrix& n) {
  json rows = json::array();
  for (std::size_t i = 0; i < n.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n.cols(); ++j) {
      const auto& x = n(i, j);
      row.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const FiberCount& c) {
  return json{{"fiber_size", c.fiber_size}, {"d_count", c.d_count}, {"r_target", c.r_target}};
}

json to_json(const FiberElement& e) {
  return json{{"assignment", e.assignment}, {"rep", to_string(e.rep)}};
}

Multisegment multisegment_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "multisegment JSON must be an array");
  std::vector<Segment> segs;
  for (const auto& item : j) {
    const auto& line_json = item.at("line");
    // The "text" mirror carries the full line; reuse the text parser for it.
    const auto probe = parse_multisegment("{[0,0]}@" + line_json.at("text").get<std::string>());
    const int a = item.at("a").get<int>();
    const int b = item.at("b").get<int>();
    if (a > b) throw Error(ErrorCode::Parse, "segment with a > b in JSON");
    segs.emplace_back(probe.line(), a, b);
  }
  return Multisegment(std::move(segs));
}

}  // namespace mseg
