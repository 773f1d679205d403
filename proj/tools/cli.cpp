#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bellperm/bijections.hpp"
#include "bellperm/bp2.hpp"
#include "bellperm/codes.hpp"
#include "bellperm/errors.hpp"
#include "bellperm/partitions.hpp"
#include "bellperm/text.hpp"

namespace bellperm::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string order = "lex";
  bool unsafe_large = false;

  std::string code;
  std::string map;
  std::string kind;
  std::string input;
  int n = -1;
  std::optional<int> k;
  std::optional<long long> limit;
  bool cycles = false;
  bool one_line = false;
  std::vector<std::string> checks;
  std::size_t cap = 10;
};

// Writes one record per item: the payload alone in text mode, a JSON object
// {kind, n, payload} per line in json-lines mode.
class Emitter {
public:
  Emitter(std::ostream& out, bool json_lines) : out_(out), json_(json_lines) {}

  void emit(std::string_view kind, int n, std::string const& payload) {
    if (json_)
      out_ << json{{"kind", kind}, {"n", n}, {"payload", payload}}.dump() << '\n';
    else
      out_ << payload << '\n';
  }

  void emit_object(std::string_view kind, int n, json payload, std::string const& text) {
    if (json_)
      out_ << json{{"kind", kind}, {"n", n}, {"payload", std::move(payload)}}.dump() << '\n';
    else
      out_ << text << '\n';
  }

  bool json_lines() const { return json_; }
  std::ostream& stream() { return out_; }

private:
  std::ostream& out_;
  bool json_;
};

struct LimitReached {};

// A cross-check inside a command disagreed.
class Mismatch : public Error {
public:
  using Error::Error;
};

std::string render(Permutation const& s, bool cycles) {
  return cycles ? text::format_cycles(s, text::CycleStart::Maximum) : text::format_permutation(s);
}

int cmd_encode(Options const& o, Emitter& e) {
  auto const f = text::parse_sef(o.input);
  auto const s = o.code == "phi" ? phi(f) : phi_tilde(f);
  e.emit("permutation", s.size(), text::format_permutation(s));
  return kOk;
}

int cmd_decode(Options const& o, Emitter& e) {
  auto const s = text::parse_permutation(o.input);
  auto const f = o.code == "phi" ? phi_inv(s) : phi_tilde_inv(s);
  e.emit("sef", f.size(), text::format_sef(f));
  return kOk;
}

int cmd_convert(Options const& o, Emitter& e) {
  bool const cycles = o.cycles || (!o.one_line && text::is_cycle_text(o.input));
  auto const& m = o.map;
  if (m == "lambda") {
    auto const pi = lambda_map(text::parse_permutation(o.input));
    e.emit("partition", pi.size(), text::format_partition(pi));
  } else if (m == "chi" || m == "mu") {
    auto const pi = text::parse_partition(o.input);
    auto const s = m == "chi" ? chi_map(pi) : mu_map(pi);
    e.emit("permutation", s.size(), render(s, o.cycles));
  } else if (m == "beta" || m == "theta") {
    auto const in = text::parse_permutation(o.input);
    auto const s = m == "beta" ? beta_map(in) : theta_map(in);
    e.emit("permutation", s.size(), render(s, cycles));
  } else if (m == "nu" || m == "zeta") {
    auto const f = text::parse_sef(o.input);
    auto const g = m == "nu" ? nu(f) : zeta(f);
    e.emit("sef", g.size(), text::format_sef(g));
  } else if (m == "canon") {
    auto const f = canonical_form(text::parse_partition(o.input));
    e.emit("sef", f.size(), text::format_word(f.word()));
  } else {  // from-canon
    auto const pi = from_canonical(text::parse_sef(o.input));
    e.emit("partition", pi.size(), text::format_partition(pi));
  }
  return kOk;
}

std::string describe(Bp2Witness const& w, Bp2Certificate const& c, Permutation const& s) {
  auto const i = static_cast<std::size_t>(w.index);
  if (w.kind == Bp2Witness::Kind::SeqExceedsLetter)
    return "gamma_" + std::to_string(w.index) + " = " + std::to_string(c.seq[i - 1]) +
           " > " + std::to_string(c.letters[i - 1]) + " = alpha_" + std::to_string(w.index);
  auto const f = phi_tilde_inv(s);
  auto const code = f.word();
  if (w.kind == Bp2Witness::Kind::SeqOutOfOrder)
    return "code value " + std::to_string(code[static_cast<std::size_t>(c.seq[i - 1] - 1)]) +
           " at gamma_" + std::to_string(w.index) + " = " + std::to_string(c.seq[i - 1]) +
           " should be " + std::to_string(w.index);
  return "code prefix <" + text::format_word(code.subspan(0, i)) +
         "> has a non-interval image";
}

int cmd_classify(Options const& o, Emitter& e) {
  auto const s = text::parse_permutation(o.input);
  auto const code = phi_tilde_inv(s);
  auto const cert = is_bp2_by_characterization(s);
  bool const by_code = is_bp2_by_code(s);
  bool const by_red = is_bp2_by_reduction(s);
  bool const bp1 = is_bp1(s);
  auto const wexc = weak_exceedances(s);
  std::string witness = cert.witness ? describe(*cert.witness, cert, s) : "";

  json payload{{"permutation", text::format_permutation(s)},
               {"inom_code", text::format_sef(code)},
               {"bp2_code", by_code},
               {"bp2_characterization", cert.verdict},
               {"bp2_reduction", by_red},
               {"bp1", bp1},
               {"k", cert.k},
               {"weak_exceedances", text::format_word(wexc)},
               {"letters", text::format_word(cert.letters)},
               {"seq", text::format_word(cert.seq)}};
  if (cert.witness) {
    payload["witness"] = witness;
    payload["witness_index"] = cert.witness->index;
  }
  auto const b = [](bool v) { return v ? "true" : "false"; };
  std::string t = "permutation: " + text::format_permutation(s) +
                  "\ninom-code: " + text::format_sef(code) +
                  "\nbp2-code: " + b(by_code) +
                  "\nbp2-characterization: " + b(cert.verdict) +
                  "\nbp2-reduction: " + b(by_red) + "\nbp1: " + b(bp1) +
                  "\nk: " + std::to_string(cert.k) +
                  "\nweak-exceedances: " + text::format_word(wexc) +
                  "\nletters: " + text::format_word(cert.letters) +
                  "\nseq: " + text::format_word(cert.seq);
  if (cert.witness) t += "\nwitness: " + witness;
  e.emit_object("report", s.size(), std::move(payload), t);
  return kOk;
}

int cmd_enumerate(Options const& o, Emitter& e) {
  long long emitted = 0;
  auto const tick = [&] {
    if (o.limit && ++emitted >= *o.limit) throw LimitReached{};
  };
  if (o.limit && *o.limit <= 0) return kOk;
  try {
    if (o.kind == "rgf") {
      if (o.k && (*o.k < 1 || *o.k > o.n))
        throw InvalidArgument("k = " + std::to_string(*o.k) + " outside [1, n]");
      for_each_rgf(o.n, [&](std::span<int const> w) {
        if (o.k && *std::max_element(w.begin(), w.end()) != *o.k) return;
        e.emit("sef", o.n, text::format_word(w));
        tick();
      });
    } else if (o.kind == "partitions") {
      for_each_partition(o.n, o.k, [&](SetPartition const& p) {
        e.emit("partition", o.n, text::format_partition(p));
        tick();
      });
    } else {
      auto const visit = [&](Permutation const& s) {
        e.emit("permutation", o.n, render(s, o.cycles));
        tick();
      };
      if (o.kind == "bp2")
        for_each_bp2(o.n, o.k, visit);
      else
        for_each_bp1(o.n, o.k, visit);
    }
  } catch (LimitReached const&) {
  }
  return kOk;
}

int cmd_count(Options const& o, Emitter& e) {
  auto const need_k = [&] {
    if (!o.k) throw InvalidArgument("count " + o.kind + " needs --k");
    return *o.k;
  };
  if (o.kind == "bell") {
    e.emit("count", o.n, bell(o.n).str());
  } else if (o.kind == "stirling") {
    e.emit("count", o.n, stirling(o.n, need_k()).str());
  } else if (o.kind == "singleton-class") {
    e.emit("count", o.n, std::to_string(count_singleton_class(o.n, need_k())));
  } else {  // bp2-table
    if (o.n < 1) throw InvalidArgument("bp2-table needs n >= 1");
    std::vector<std::string> row;
    BigInt sum = 0;
    for (int k = 1; k <= o.n; ++k) {
      auto const b = count_bp2(o.n, k);
      if (b != stirling(o.n, k))
        throw Mismatch("b(n,k) disagrees with S(n,k) at k = " + std::to_string(k));
      row.push_back(b.str());
      sum += b;
    }
    if (sum != bell(o.n)) throw Mismatch("row sum disagrees with B(n)");
    std::string line;
    for (auto const& v : row) line += (line.empty() ? "" : " ") + v;
    if (e.json_lines())
      e.emit_object("count", o.n, json{{"row", line}, {"sum", sum.str()}}, "");
    else
      e.stream() << line << "\nsum " << sum.str() << '\n';
  }
  return kOk;
}

int cmd_verify(Options const& o, Emitter& e, oracle::Hooks const& hooks) {
  oracle::CheckOptions options;
  options.cap = o.cap;
  options.allow_large = o.unsafe_large;
  options.hooks = hooks;
  auto const reports = oracle::run_suite(o.n, o.checks, options);
  std::size_t failed = 0;
  for (auto const& r : reports) {
    failed += !r.passed();
    if (e.json_lines())
      e.stream() << oracle::format_json(r) << '\n';
    else
      e.stream() << oracle::format_text(r) << '\n';
  }
  if (!e.json_lines())
    e.stream() << (failed ? "FAILED " : "OK ") << reports.size() - failed << "/"
               << reports.size() << " checks passed\n";
  return failed ? kDomainFailure : kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err,
        oracle::Hooks const& hooks) {
  CLI::App app{"Bell permutations of the second kind: codes, bijections, enumeration"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--order", o.order, "Enumeration order (only lex)")
      ->check(CLI::IsMember({"lex"}));
  app.add_flag("--unsafe-large", o.unsafe_large, "Lift the desk-scale oracle limits");

  auto* encode = app.add_subcommand("encode", "Subexceedant function -> permutation");
  auto* decode = app.add_subcommand("decode", "Permutation -> subexceedant function");
  for (auto* sub : {encode, decode}) {
    sub->add_option("--code", o.code, "phi or inom")
        ->required()
        ->check(CLI::IsMember({"phi", "inom"}));
    sub->add_option("input", o.input)->required();
  }

  auto* convert = app.add_subcommand("convert", "Apply a bijection or transform");
  convert->add_option("map", o.map)
      ->required()
      ->check(CLI::IsMember(
          {"lambda", "chi", "mu", "beta", "theta", "nu", "zeta", "canon", "from-canon"}));
  convert->add_option("input", o.input)->required();

  auto* classify = app.add_subcommand("classify", "Run every recognizer on a permutation");
  classify->add_option("input", o.input)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream a combinatorial class");
  enumerate->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"partitions", "rgf", "bp2", "bp1"}));
  enumerate->add_option("--limit", o.limit, "Stop after this many items");

  auto* count = app.add_subcommand("count", "Exact counts");
  count->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"bell", "stirling", "bp2-table", "singleton-class"}));

  for (auto* sub : {enumerate, count}) {
    sub->add_option("--n", o.n)->required();
    sub->add_option("--k", o.k);
  }
  for (auto* sub : {convert, enumerate}) {
    auto* c = sub->add_flag("--cycles", o.cycles, "Emit cycle notation, maxima first");
    sub->add_flag("--one-line", o.one_line, "Emit one-line notation")->excludes(c);
  }

  auto* verify = app.add_subcommand("verify", "Run the exhaustive oracle suite");
  verify->add_option("--n-max,--n", o.n)->required();
  verify->add_option("--check", o.checks, "Restrict to these checks (repeatable)");
  verify->add_option("--cap", o.cap, "Counterexamples kept per check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  Emitter emitter(out, o.format == "json-lines");
  try {
    if (*encode) return cmd_encode(o, emitter);
    if (*decode) return cmd_decode(o, emitter);
    if (*convert) return cmd_convert(o, emitter);
    if (*classify) return cmd_classify(o, emitter);
    if (*enumerate) return cmd_enumerate(o, emitter);
    if (*count) return cmd_count(o, emitter);
    return cmd_verify(o, emitter, hooks);
  } catch (NotAnRgf const& e) {
    err << "error: not an RGF: " << e.what() << '\n';
    return kDomainFailure;
  } catch (NotBp2 const& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (NotBp1 const& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (Mismatch const& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace bellperm::cli
