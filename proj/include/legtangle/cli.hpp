#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "legtangle/jsonio.hpp"
#include "legtangle/svg.hpp"

namespace legtangle {

namespace detail {

/// A tangle argument is either a fraction "P/Q" (standard position) or a
/// vector notation "(2,1^1,1)" with optional exponents.
struct TangleSpec {
  Fraction q;
  TwistVector v;
  FlypeVector f;
  bool input_was_reduced = false;
};

inline TangleSpec parse_tangle_spec(const std::string& s) {
  TangleSpec out;
  if (s.find(',') != std::string::npos || s.find('(') != std::string::npos) {
    parse_vector_notation(s, out.v, out.f);
    if (!is_regular(out.v))
      throw std::invalid_argument("twist vector is not regular: '" + s + "'");
    validate_flype(out.v, out.f);
    out.q = cf_value(out.v);
  } else {
    out.q = parse_fraction(s, &out.input_was_reduced);
    out.v = regular_cf(out.q);
    out.f = FlypeVector::zeros(out.v.n());
  }
  return out;
}

inline FlypeVector parse_flypes_for(const Fraction& q, const std::string& s) {
  TwistVector v;
  FlypeVector f;
  parse_vector_notation(s, v, f);
  TwistVector expect = regular_cf(q);
  if (!(v == expect))
    throw std::invalid_argument("vector '" + s + "' does not expand " + q.str());
  validate_flype(v, f);
  return f;
}

inline void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: '" + out_path + "'");
  file << text;
}

}  // namespace detail

/// Command-line entry point; returns the process exit code. 0 on success,
/// 2 on input validation errors, 1 on internal failures.
inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"regular Legendrian rational tangles and box-dot diagrams"};
  app.require_subcommand(1);

  std::string arg_q, arg_f, arg_g, arg_spec;
  std::string out_path;
  std::string writhe_flag = "self";
  std::string layers_flag;
  Int scale = 40;

  auto add_writhe = [&](CLI::App* cmd) {
    cmd->add_option("--strand-writhe", writhe_flag, "strand writhe convention")
        ->check(CLI::IsMember({"self", "half-mixed"}));
  };

  auto* cf_cmd = app.add_subcommand("cf", "regular continued fraction of a rational");
  cf_cmd->add_option("fraction", arg_q, "rational, e.g. 37/26")->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "box-dot diagram as JSON");
  diagram_cmd->add_option("tangle", arg_spec, "fraction or vector notation")->required();
  diagram_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* tangle_cmd = app.add_subcommand("tangle", "front projection as JSON");
  tangle_cmd->add_option("tangle", arg_spec, "fraction or vector notation")->required();
  tangle_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* inv_cmd = app.add_subcommand("invariants", "classical and strandwise invariants");
  inv_cmd->add_option("tangle", arg_spec, "fraction or vector notation")->required();
  inv_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_writhe(inv_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "decide a pair of flyped tangles");
  classify_cmd->add_option("fraction", arg_q)->required();
  classify_cmd->add_option("f", arg_f, "first vector notation")->required();
  classify_cmd->add_option("g", arg_g, "second vector notation")->required();
  classify_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_writhe(classify_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "verdicts for all exponent pairs of q");
  enum_cmd->add_option("fraction", arg_q)->required();
  enum_cmd->add_option("--out", out_path, "write to file instead of stdout");
  add_writhe(enum_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG rendering");
  render_cmd->add_option("tangle", arg_spec, "fraction or vector notation")->required();
  render_cmd->add_option("--layers", layers_flag,
                         "comma list: template,subdivision,marks,signs,classes,tangle,unknot,foliation");
  render_cmd->add_option("--scale", scale, "pixels per grid unit");
  render_cmd->add_option("--out", out_path, "write to file instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    StrandWrithe convention = parse_strand_writhe(writhe_flag);
    if (cf_cmd->parsed()) {
      bool reduced = false;
      Fraction q = parse_fraction(arg_q, &reduced);
      out << vector_notation(regular_cf(q)) << "\n";
      if (reduced) err << "note: input reduced to " << q.str() << "\n";
    } else if (diagram_cmd->parsed()) {
      auto spec = detail::parse_tangle_spec(arg_spec);
      BoxDotDiagram d = make_diagram(spec.q, spec.f);
      json j = diagram_json(d);
      if (spec.input_was_reduced) j["input_reduced"] = true;
      detail::write_output(j.dump(2) + "\n", out_path, out);
    } else if (tangle_cmd->parsed()) {
      auto spec = detail::parse_tangle_spec(arg_spec);
      TangleFront fp = build_front(make_diagram(spec.q, spec.f));
      json j = front_json(fp);
      if (spec.input_was_reduced) j["input_reduced"] = true;
      detail::write_output(j.dump(2) + "\n", out_path, out);
    } else if (inv_cmd->parsed()) {
      auto spec = detail::parse_tangle_spec(arg_spec);
      BoxDotDiagram d = make_diagram(spec.q, spec.f);
      json j = invariants_report(d, convention);
      if (spec.input_was_reduced) j["input_reduced"] = true;
      detail::write_output(j.dump(2) + "\n", out_path, out);
    } else if (classify_cmd->parsed()) {
      Fraction q = parse_fraction(arg_q);
      FlypeVector f = detail::parse_flypes_for(q, arg_f);
      FlypeVector g = detail::parse_flypes_for(q, arg_g);
      Verdict v = classify_pair(q, f, g, convention);
      detail::write_output(verdict_json(q, arg_f, arg_g, v, convention).dump(2) + "\n", out_path,
                           out);
    } else if (enum_cmd->parsed()) {
      Fraction q = parse_fraction(arg_q);
      TwistVector v = regular_cf(q);
      auto all = enumerate_flype_vectors(v);
      std::vector<TangleData> data;
      data.reserve(all.size());
      for (const auto& f : all) data.push_back(tangle_data(q, f, convention));
      std::ostringstream lines;
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          Verdict verdict = classify(data[i], data[j]);
          lines << verdict_json(q, vector_notation(v, all[i]), vector_notation(v, all[j]), verdict,
                                convention)
                       .dump()
                << "\n";
        }
      detail::write_output(lines.str(), out_path, out);
    } else if (render_cmd->parsed()) {
      auto spec = detail::parse_tangle_spec(arg_spec);
      RenderOptions opts;
      opts.scale = scale;
      if (render_cmd->count("--layers")) {
        opts.layers.clear();
        std::stringstream ss(layers_flag);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) opts.layers.insert(parse_layer(item));
        }
      }
      BoxDotDiagram d = make_diagram(spec.q, spec.f);
      detail::write_output(render(d, opts), out_path, out);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace legtangle
