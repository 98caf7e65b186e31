#include "mseg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "mseg/batch.hpp"
#include "mseg/error.hpp"
#include "mseg/fiber.hpp"
#include "mseg/functorial.hpp"
#include "mseg/involution.hpp"
#include "mseg/json.hpp"
#include "mseg/klyachko.hpp"
#include "mseg/text.hpp"
#include "mseg/types_models.hpp"
#include "mseg/weil_deligne.hpp"

namespace mseg {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  std::string context_file;
  std::optional<int> d;
  std::uint64_t seed = 0;
  std::string out_file;
};

std::string read_file(const std::string& path, ErrorCode code) {
  std::ifstream in(path);
  if (!in) throw Error(code, "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// "-" reads the expression from standard input.
std::string expression(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

std::optional<ExtensionContext> load_context(const Globals& g) {
  if (g.context_file.empty()) return std::nullopt;
  auto ctx = parse_context(read_file(g.context_file, ErrorCode::BadContext));
  if (g.d && *g.d != ctx.degree())
    throw Error(ErrorCode::BadContext, "--d " + std::to_string(*g.d) + " disagrees with the context degree " +
                                           std::to_string(ctx.degree()));
  return ctx;
}

ExtensionContext require_context(const Globals& g, const char* verb) {
  auto ctx = load_context(g);
  if (!ctx) throw Error(ErrorCode::BadContext, std::string(verb) + " needs --context <file>");
  return std::move(*ctx);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

std::vector<mpq_class> parse_rationals(const std::string& text) {
  std::vector<mpq_class> out;
  std::string item;
  std::istringstream in(text);
  while (in >> item) {
    std::istringstream parts(item);
    std::string piece;
    while (std::getline(parts, piece, ','))
      if (!piece.empty()) out.push_back(parse_rational(piece));
  }
  return out;
}

// Rows separated by ';', entries by whitespace or ','.
ExactMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<mpq_class>> rows;
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) {
    auto entries = parse_rationals(row);
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  return ExactMatrix(rows);
}

std::string grid(const ExactMatrix& n) {
  std::string out;
  for (std::size_t i = 0; i < n.rows(); ++i) {
    for (std::size_t j = 0; j < n.cols(); ++j) {
      if (j > 0) out += ' ';
      out += n(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::string klyachko_text(const KlyachkoResult& k) {
  switch (k.tag()) {
    case KlyachkoResult::Tag::Admits: return "admits r=" + std::to_string(k.r());
    case KlyachkoResult::Tag::NoModel: return "no model";
    case KlyachkoResult::Tag::Unknown: return "unknown";
  }
  return "";
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  // Emits either the text lines or the JSON document.
  void emit(const std::string& verb, const std::string& input, const json& result, const std::string& text) {
    if (g_.json) {
      out_ << json{{"schema", kJsonSchema}, {"verb", verb}, {"input", input}, {"result", result}}.dump(2) << '\n';
    } else {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
    }
  }

  void dual(const std::string& arg, const std::string& mode) {
    const auto text = expression(arg);
    if (mode == "dual") {
      // A bare multisegment is answered with its dual multisegment.
      std::optional<Multisegment> m;
      try {
        m = parse_multisegment(text);
      } catch (const Error&) {
      }
      if (m) {
        const auto t = mw_dual(*m);
        emit("dual", text, to_json(t), to_string(t));
        return;
      }
      const auto r = zelevinsky_dual(parse_rep(text));
      emit("dual", text, to_json(r), to_string(r));
      return;
    }
    const auto r = dual_presentation(parse_rep(text), mode == "swap" ? DualMode::SwapFlag : DualMode::Normalize);
    emit("dual", text, to_json(r), to_string(r));
  }

  void sl2(const std::string& arg) {
    const auto text = expression(arg);
    const auto p = sl2_type(parse_rep(text));
    emit("sl2", text, to_json(p), to_string(p));
  }

  void depth(const std::string& arg) {
    const auto text = expression(arg);
    const auto c = depth_sequence(parse_rep(text));
    emit("depth", text, to_json(c), to_string(c));
  }

  void whittaker(const std::string& arg, std::optional<int> n) {
    const auto c = parse_composition(expression(arg));
    const int total = n.value_or(static_cast<int>(c.degree()));
    const auto pos = whittaker_positions(c, total);
    emit("whittaker-positions", arg, json{{"n", total}, {"positions", pos}}, join(pos));
  }

  void klyachko(const std::string& arg, bool unitary) {
    const auto text = expression(arg);
    const auto r = parse_rep(text);
    const auto k = unitary ? klyachko_unitarizable(r) : klyachko_rep(r);
    emit("klyachko", text, to_json(k), klyachko_text(k));
  }

  void is_ladder_verb(const std::string& arg) {
    const auto text = expression(arg);
    const auto m = parse_multisegment(text);
    const bool lad = is_ladder(m);
    const bool proper = is_proper_ladder(m);
    const bool sp = is_speh(m);
    const bool gen = is_generic(m);
    auto yn = [](bool b) { return b ? "true" : "false"; };
    emit("is-ladder", text, json{{"ladder", lad}, {"proper", proper}, {"speh", sp}, {"generic", gen}},
         std::string("ladder=") + yn(lad) + " proper=" + yn(proper) + " speh=" + yn(sp) + " generic=" + yn(gen));
  }

  void decompose(const std::string& arg) {
    const auto text = expression(arg);
    const auto parts = proper_decomposition(parse_multisegment(text));
    json result = json::array();
    std::string lines;
    for (const auto& p : parts) {
      result.push_back(to_json(p));
      lines += to_string(p) + '\n';
    }
    emit("decompose", text, result, lines);
  }

  void transfer(const std::string& verb, const std::string& arg) {
    const auto ctx = require_context(g_, verb.c_str());
    const auto text = expression(arg);
    const auto r = parse_rep(text, &ctx);
    const auto image = verb == "bc" ? bc(r, ctx) : ai(r, ctx);
    emit(verb, text, to_json(image), to_string(image));
  }

  void twist(const std::string& arg, int j, const std::string& by) {
    const auto ctx = require_context(g_, "twist");
    const auto text = expression(arg);
    const auto r = parse_rep(text, &ctx);
    const auto t = by == "gamma" ? galois_twist(r, j, ctx) : kappa_twist(r, j, ctx);
    emit("twist", text, to_json(t), to_string(t));
  }

  void fiber(const std::string& arg, const std::string& kind_text, bool count, bool elements) {
    const auto text = expression(arg);
    const OrbitKind kind = kind_text == "II" ? OrbitKind::TypeII : OrbitKind::TypeI;
    auto ctx = load_context(g_);
    Multisegment m;
    if (ctx) {
      m = parse_multisegment(text, &*ctx);
    } else {
      if (!g_.d) throw Error(ErrorCode::BadContext, "fiber needs --context <file> or --d <prime>");
      m = parse_multisegment(text);
      ctx.emplace(*g_.d);
      if (!m.empty()) m = synthesize(m, kind, *ctx);
    }

    json result;
    std::string lines;
    if (count) {
      const auto c = kind == OrbitKind::TypeI ? count_klyachko_fiber_bc(m, *ctx) : count_klyachko_fiber_ai(m, *ctx);
      result = to_json(c);
      lines = "fiber_size=" + std::to_string(c.fiber_size) + " d_count=" + std::to_string(c.d_count) +
              " r_target=" + std::to_string(c.r_target) + "\n";
    }
    json items = json::array();
    std::string element_lines;
    const auto size = (kind == OrbitKind::TypeI ? enumerate_fiber_bc : enumerate_fiber_ai)(
        m, *ctx, [&](const FiberElement& e) {
          if (!elements) return;
          items.push_back(to_json(e));
          element_lines += to_string(e.rep) + '\n';
        });
    if (!count) {
      result = json{{"fiber_size", size}};
      lines = "fiber_size=" + std::to_string(size) + "\n";
    }
    if (elements) result["elements"] = items;
    emit("fiber", text, result, lines + element_lines);
  }

  void jordan(const std::string& arg, const std::string& matrix, const std::string& scalars, bool show) {
    ExactMatrix n;
    std::string input;
    if (!matrix.empty()) {
      n = parse_matrix(matrix);
      input = matrix;
    } else {
      if (arg.empty()) throw Error(ErrorCode::Parse, "jordan needs a multisegment or --matrix");
      input = expression(arg);
      n = nilpotent_of(parse_multisegment(input));
    }
    const auto p = jordan_partition(n);
    json result{{"partition", to_json(p)}};
    std::string lines = to_string(p) + '\n';
    if (show) {
      result["matrix"] = to_json(n);
      lines += grid(n);
    }
    if (!scalars.empty()) {
      const auto cs = parse_rationals(scalars);
      const auto big = induced_block(n, cs);
      const auto q = jordan_partition(big);
      result["induced"] = to_json(q);
      lines += "induced " + to_string(q) + '\n';
    }
    emit("jordan", input, result, lines);
  }

  void batch(const std::string& config_path) {
    const auto config = parse_batch_config(read_file(config_path, ErrorCode::BadContext));
    const auto rows = run_batch(config, g_.seed);
    if (g_.out_file.empty()) {
      write_csv(out_, rows);
      return;
    }
    std::ofstream file(g_.out_file);
    if (!file) throw Error(ErrorCode::BadContext, "cannot write " + g_.out_file);
    write_csv(file, rows);
    if (g_.json)
      out_ << json{{"schema", kJsonSchema}, {"verb", "batch"}, {"rows", rows.size()}, {"out", g_.out_file}}.dump(2)
           << '\n';
    else
      out_ << "wrote " << rows.size() << " rows to " << g_.out_file << '\n';
  }

 private:
  // Without a context file a plain line is read as the fixed line of an
  // implicit orbit named after it.
  static Multisegment synthesize(const Multisegment& m, OrbitKind kind, ExtensionContext& ctx) {
    const CuspidalLine& line = m.line();
    if (!std::holds_alternative<Plain>(line.atom.role))
      throw Error(ErrorCode::BadContext, "orbit-annotated lines need --context <file>");
    int k = line.dim_k();
    if (kind == OrbitKind::TypeII) {
      if (k % ctx.degree() != 0)
        throw Error(ErrorCode::BadContext, "a FixedF line has dimension divisible by d; got k=" + std::to_string(k));
      k /= ctx.degree();
    }
    ctx.register_orbit(OrbitDatum{line.atom.name, k, kind});
    CuspidalAtom atom = kind == OrbitKind::TypeI ? ctx.fixed_e(line.atom.name) : ctx.fixed_f(line.atom.name);
    return relocate(m, CuspidalLine{std::move(atom), line.offset});
  }

  const Globals& g_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multisegment calculus for GL(n) representations"};
  app.name("mseg");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  int d_value = 0;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--context", g.context_file, "Extension context file");
  auto* d_opt = app.add_option("--d", d_value, "Degree of the extension (prime)");
  app.add_option("--seed", g.seed, "Seed offset for random sweeps");
  app.add_option("--out", g.out_file, "Output file for batch CSV");

  std::string expr;
  std::string mode = "dual";
  std::optional<int> n;
  bool unitary = false;
  int j = 1;
  std::string by = "kappa";
  std::string kind = "I";
  bool count = false;
  bool elements = false;
  std::string matrix;
  std::string scalars;
  bool show_matrix = false;

  auto expr_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("expr", expr, "Expression ('-' reads stdin)")->required();
    return sub;
  };
  auto* dual = expr_cmd("dual", "Zelevinsky involution");
  dual->add_option("--mode", mode, "dual: the dual multisegment / rep; swap: exchange L and Z; normalize: other "
                                   "classification")
      ->check(CLI::IsMember({"dual", "swap", "normalize"}));
  auto* sl2 = expr_cmd("sl2", "SL(2)-type partition");
  auto* depth = expr_cmd("depth", "Depth sequence");
  auto* whit = expr_cmd("whittaker-positions", "Non-trivial slots of the degenerate character");
  whit->add_option("--n", n, "Size n (defaults to the sum of the composition)");
  auto* kly = expr_cmd("klyachko", "Klyachko type");
  kly->add_flag("--unitary", unitary, "Treat the input as a product of Speh factors");
  auto* lad = expr_cmd("is-ladder", "Ladder predicates");
  auto* dec = expr_cmd("decompose", "Proper-ladder decomposition");
  auto* bc_cmd = expr_cmd("bc", "Base change");
  auto* ai_cmd = expr_cmd("ai", "Automorphic induction");
  auto* tw = expr_cmd("twist", "Twist by kappa^j or gamma^j");
  tw->add_option("--j", j, "Exponent");
  tw->add_option("--by", by, "kappa (base field) or gamma (extension)")->check(CLI::IsMember({"kappa", "gamma"}));
  auto* fib = expr_cmd("fiber", "Preimages under bc (kind I) or ai (kind II)");
  fib->add_option("--kind", kind, "Orbit kind")->check(CLI::IsMember({"I", "II"}));
  fib->add_flag("--count-klyachko", count, "Count preimages of the target's Klyachko type");
  fib->add_flag("--emit-elements", elements, "List every preimage");
  auto* jor = app.add_subcommand("jordan", "Jordan type of a nilpotent matrix");
  jor->add_option("expr", expr, "Multisegment whose monodromy is used");
  jor->add_option("--matrix", matrix, "Explicit matrix, rows separated by ';'");
  jor->add_option("--scalars", scalars, "Nonzero rationals c_j for diag(c_1 N, ..., c_d N)");
  jor->add_flag("--print-matrix", show_matrix, "Also print the matrix");
  auto* bat = app.add_subcommand("batch", "Run a sweep configuration and write CSV");
  bat->add_option("config", expr, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : static_cast<int>(ErrorCode::Usage);
  }
  if (d_opt->count() > 0) g.d = d_value;

  Runner run(g, out);
  try {
    if (dual->parsed()) run.dual(expr, mode);
    else if (sl2->parsed()) run.sl2(expr);
    else if (depth->parsed()) run.depth(expr);
    else if (whit->parsed()) run.whittaker(expr, n);
    else if (kly->parsed()) run.klyachko(expr, unitary);
    else if (lad->parsed()) run.is_ladder_verb(expr);
    else if (dec->parsed()) run.decompose(expr);
    else if (bc_cmd->parsed()) run.transfer("bc", expr);
    else if (ai_cmd->parsed()) run.transfer("ai", expr);
    else if (tw->parsed()) run.twist(expr, j, by);
    else if (fib->parsed()) run.fiber(expr, kind, count, elements);
    else if (jor->parsed()) run.jordan(expr, matrix, scalars, show_matrix);
    else if (bat->parsed()) run.batch(expr);
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error[Internal]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mseg
