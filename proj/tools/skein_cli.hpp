#pragma once

// Command-line front end. Kept header-only so the tests can drive run_cli
// without spawning processes.
//
// Exit codes: 0 success, 1 internal failure, 2 parse/usage error,
// 3 domain error (NotSymmetric, NotPrimitive, BadDeterminant, ...).

#include <algorithm>
#include <complex>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "skein/skein.hpp"

namespace skein::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Usage-level failure (bad flag value, bad matrix string); exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "root:r" as e^{i pi/2r}, otherwise "re" or "re,im".
inline Complex parse_evaluation_point(const std::string& text) {
  try {
    if (text.rfind("root:", 0) == 0) {
      std::size_t used = 0;
      const int r = std::stoi(text.substr(5), &used);
      if (used != text.size() - 5 || r < 1) throw UsageError("bad root order");
      return root_of_unity(r);
    }
    const auto comma = text.find(',');
    std::size_t used = 0;
    const std::string re = text.substr(0, comma);
    const double x = std::stod(re, &used);
    if (used != re.size()) throw UsageError("bad real part");
    double y = 0.0;
    if (comma != std::string::npos) {
      const std::string im = text.substr(comma + 1);
      y = std::stod(im, &used);
      if (used != im.size()) throw UsageError("bad imaginary part");
    }
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError("--eval-at-t expects 're', 're,im' or 'root:r', got '" + text + "'");
  }
}

inline GluingMatrix parse_matrix(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) throw UsageError("");
    }
  } catch (const std::logic_error&) {
    throw UsageError("--matrix expects four integers a,b,p,q, got '" + text + "'");
  }
  if (v.size() != 4) throw UsageError("--matrix expects four integers a,b,p,q, got '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string format = "text";
  std::string eval_at;

  /// Reads an element argument: "-" means stdin, a leading '[' means JSON.
  template <class Element>
  Element read(const std::string& arg, io::ElementKind kind) {
    std::string text = arg;
    if (arg == "-") text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      io::Json j;
      try {
        j = io::Json::parse(text);
      } catch (const io::Json::parse_error& e) {
        throw io::JsonFormatError(e.what());
      }
      if constexpr (std::is_same_v<Element, SkeinElement>) return io::skein_from_json(j);
      if constexpr (std::is_same_v<Element, NTElement>) return io::nc_from_json(j);
      if constexpr (std::is_same_v<Element, SolidTorusElement>) return io::solid_from_json(j);
    }
    return std::get<Element>(io::eval_expression(io::parse_element(text, kind)));
  }

  template <class Value>
  void emit(const Value& v) {
    const std::optional<Complex> z =
        eval_at.empty() ? std::nullopt : std::optional<Complex>(parse_evaluation_point(eval_at));
    if (format == "json") {
      out_ << (z ? io::to_json_at(v, *z) : io::to_json(v)).dump() << '\n';
    } else {
      out_ << (z ? io::to_text_at(v, *z) : io::to_text(v)) << '\n';
    }
  }

  void emit_integer(const Integer& n) {
    if (format == "json") {
      out_ << io::Json(n.str()).dump() << '\n';
    } else {
      out_ << n.str() << '\n';
    }
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

inline io::ElementKind parse_kind(const std::string& k) {
  if (k == "skein") return io::ElementKind::skein;
  if (k == "nc") return io::ElementKind::nc;
  if (k == "solid") return io::ElementKind::solid;
  throw UsageError("unknown kind '" + k + "'");
}

/// Element arguments may start with '-' ("-t^2 - t^-2", "-a(1)"). Anything
/// that is not a known flag or a plain number gets a leading space, which the
/// element grammar ignores, so CLI11 sees it as a positional.
inline std::vector<std::string> protect_negative_elements(const std::vector<std::string>& args) {
  static const std::vector<std::string> flags = {"-h", "--help", "--format", "--eval-at-t", "--kind", "--matrix",
                                                 "--eval-at"};
  std::vector<std::string> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    const bool dashed = a.size() > 1 && a[0] == '-';
    const std::string name = a.substr(0, a.find('='));
    const bool flag = std::find(flags.begin(), flags.end(), name) != flags.end();
    const bool number = a.find_first_not_of("0123456789.", 1) == std::string::npos;
    out.push_back(dashed && !flag && !number ? " " + a : a);
  }
  return out;
}

/// Runs one command. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Kauffman bracket skein algebra of the torus", "skein"};
  app.fallthrough();
  app.require_subcommand(1);
  Session s(in, out);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--eval-at-t", s.eval_at, "Evaluate coefficients at t: 're', 're,im' or 'root:r' for e^{i pi/2r}");

  std::string kind = "skein";
  std::string lhs;
  std::string rhs;

  auto* eval = app.add_subcommand("eval", "Print the normal form of an element");
  eval->add_option("--kind", kind, "skein | nc | solid")->check(CLI::IsMember({"skein", "nc", "solid"}));
  eval->add_option("element", lhs)->required();

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("--kind", kind, "skein | nc")->check(CLI::IsMember({"skein", "nc"}));
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();

  auto* embed_cmd = app.add_subcommand("embed", "Image of a skein element in the noncommutative torus");
  embed_cmd->add_option("element", lhs)->required();

  auto* unembed_cmd = app.add_subcommand("unembed", "Skein element with the given symmetric image");
  unembed_cmd->add_option("element", lhs)->required();

  auto* pi_cmd = app.add_subcommand("pi", "Image of a skein element in the solid torus");
  pi_cmd->add_option("element", lhs)->required();

  auto* act_cmd = app.add_subcommand("act", "Action of a skein element on a solid-torus element");
  act_cmd->add_option("skein", lhs)->required();
  act_cmd->add_option("solid", rhs)->required();

  std::string matrix;
  auto* lens = app.add_subcommand("lens", "Skein module of a lens space");
  lens->add_option("--matrix", matrix, "Gluing matrix a,b,p,q with aq - bp = -1")->required();
  lens->require_subcommand(1);
  auto* reduce = lens->add_subcommand("reduce", "Rewrite 1 (x) u over {1 (x) a^k : k <= p/2}");
  reduce->add_option("element", lhs)->required();

  unsigned jw_n = 0;
  std::int64_t jw_p = 0;
  std::int64_t jw_q = 0;
  int jw_root = 0;
  auto* jw = app.add_subcommand("jw-expand", "Jones-Wenzl decorated (np,nq) curve in the (p,q)_T basis");
  jw->add_option("n", jw_n)->required();
  jw->add_option("p", jw_p)->required();
  jw->add_option("q", jw_q)->required();
  jw->add_option("--eval-at", jw_root, "Evaluate at t = e^{i pi/2r}; requires n <= r - 2");

  auto* intersect = app.add_subcommand("intersect", "Intersection number of two skein elements");
  intersect->add_option("lhs", lhs)->required();
  intersect->add_option("rhs", rhs)->required();

  try {
    const std::vector<std::string> protected_args = protect_negative_elements(args);
    std::vector<std::string> reversed(protected_args.rbegin(), protected_args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    using io::ElementKind;
    if (*eval) {
      switch (parse_kind(kind)) {
        case ElementKind::skein: s.emit(s.read<SkeinElement>(lhs, ElementKind::skein)); break;
        case ElementKind::nc: s.emit(s.read<NTElement>(lhs, ElementKind::nc)); break;
        case ElementKind::solid: s.emit(s.read<SolidTorusElement>(lhs, ElementKind::solid)); break;
      }
    } else if (*mul) {
      if (parse_kind(kind) == ElementKind::nc) {
        s.emit(s.read<NTElement>(lhs, ElementKind::nc) * s.read<NTElement>(rhs, ElementKind::nc));
      } else {
        s.emit(s.read<SkeinElement>(lhs, ElementKind::skein) * s.read<SkeinElement>(rhs, ElementKind::skein));
      }
    } else if (*embed_cmd) {
      s.emit(embed(s.read<SkeinElement>(lhs, ElementKind::skein)));
    } else if (*unembed_cmd) {
      s.emit(unembed(s.read<NTElement>(lhs, ElementKind::nc)));
    } else if (*pi_cmd) {
      s.emit(project(s.read<SkeinElement>(lhs, ElementKind::skein)));
    } else if (*act_cmd) {
      s.emit(act(s.read<SkeinElement>(lhs, ElementKind::skein), s.read<SolidTorusElement>(rhs, ElementKind::solid)));
    } else if (*lens) {
      const GluingMatrix g = parse_matrix(matrix);
      s.emit(lens_reduce(g, s.read<SolidTorusElement>(lhs, ElementKind::solid)));
    } else if (*jw) {
      if (jw->count("--eval-at") > 0) {
        require_idempotent_defined(jw_n, jw_root);
        s.eval_at = "root:" + std::to_string(jw_root);
      }
      s.emit(jw_expand(jw_n, jw_p, jw_q));
    } else if (*intersect) {
      s.emit_integer(intersection_number(s.read<SkeinElement>(lhs, ElementKind::skein),
                                         s.read<SkeinElement>(rhs, ElementKind::skein)));
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const io::JsonFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace skein::cli
