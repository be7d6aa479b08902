#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mhc/classes.hpp"
#include "mhc/degeneration.hpp"
#include "mhc/equivariant.hpp"
#include "mhc/error.hpp"
#include "mhc/io.hpp"
#include "mhc/poly_io.hpp"
#include "mhc/spectra.hpp"

namespace mhc::cli {

/// Process exit statuses.
enum Status : int { ok = 0, computation_error = 1, input_error = 2 };

namespace detail {

using io::json;

struct Printer {
  std::ostream& out;
  bool machine;

  void poly(const char* key, const Poly& p) const {
    if (machine) {
      out << json{{key, format_poly(p)}}.dump() << '\n';
    } else {
      out << format_poly(p) << '\n';
    }
  }
  void unipoly(const char* key, const UniPoly& p) const {
    if (machine) {
      out << json{{key, format_unipoly(p)}}.dump() << '\n';
    } else {
      out << format_unipoly(p) << '\n';
    }
  }
  void document(const json& j) const { out << j.dump(2) << '\n'; }
};

inline void print_hodge_text(std::ostream& out, const HodgeStructure& h) {
  if (h.empty()) out << "(no Hodge numbers)\n";
  for (const auto& [pq, d] : h.dims())
    out << "h^{" << to_string(pq.first) << "," << to_string(pq.second) << "} = " << d.str() << '\n';
}

inline void print_stratification_text(std::ostream& out, const Stratification& s) {
  out << "components:";
  for (const auto& c : s.components) out << ' ' << c.id << "(e=" << c.multiplicity << ')';
  out << '\n';
  for (const auto& [J, cls] : s.strata_d) out << format_subset(J) << ": " << format_poly(cls.evaluate()) << '\n';
}

inline json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw SchemaError(std::string("inline JSON is malformed: ") + e.what());
    }
  }
  return io::read_json_file(arg);
}

}  // namespace detail

/// Runs one command line (without the program name). Never throws; errors go to
/// `err` and select the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::json;
  CLI::App app{"Hodge-Euler polynomials, motivic nearby fibres and singularity spectra", "mhc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::string expr, file, move_file, file_b;
  bool specialize = false, invert = false, check_open = false;
  std::optional<int> middle;
  bool saito = false, varchenko = false, pairs = false;
  std::optional<std::int64_t> char_n;

  auto* poly_cmd = app.add_subcommand("poly", "Normalize a polynomial");
  poly_cmd->add_option("expr", expr, "Polynomial in u, v")->required();
  poly_cmd->add_flag("--specialize-v", specialize, "Substitute u -> t, v -> 1");
  poly_cmd->add_flag("--invert", invert, "Substitute (u, v) -> (1/u, 1/v)");

  auto* class_cmd = app.add_subcommand("class", "Hodge-Euler polynomial of a class expression");
  class_cmd->add_option("expr", expr, "Class expression")->required();

  auto* nearby_cmd = app.add_subcommand("nearby", "Motivic nearby fibre of a degeneration");
  nearby_cmd->add_option("file", file, "Degeneration file")->required();
  nearby_cmd->add_flag("--check-open", check_open, "Cross-check against the open-strata formula");
  nearby_cmd->add_option("--middle", middle, "Print the Hodge numbers of H^n of the limit fibre");

  auto* vanishing_cmd = app.add_subcommand("vanishing", "Motivic vanishing fibre of a degeneration");
  vanishing_cmd->add_option("file", file, "Degeneration file")->required();

  auto* blowup_cmd = app.add_subcommand("blowup", "Strata after blowing up a centre in the special fibre");
  blowup_cmd->add_option("file", file, "Degeneration file")->required();
  blowup_cmd->add_option("move", move_file, "Blow-up move file")->required();

  auto* jordan_cmd = app.add_subcommand("jordan", "Jordan block sizes from a monodromy weight grading");
  jordan_cmd->add_option("input", file, "Weight grading file or inline JSON")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectral invariants of an isolated singularity");
  spectrum_cmd->add_option("file", file, "Germ file")->required();
  auto* o_saito = spectrum_cmd->add_flag("--saito", saito, "Spectrum in Saito's normalization");
  auto* o_varchenko = spectrum_cmd->add_flag("--varchenko", varchenko, "Spectrum in Varchenko's normalization");
  auto* o_pairs = spectrum_cmd->add_flag("--pairs", pairs, "Spectral pairs");
  auto* o_char = spectrum_cmd->add_option("--char", char_n, "Characteristic pairs with the given n");
  o_saito->excludes(o_varchenko)->excludes(o_pairs)->excludes(o_char);
  o_varchenko->excludes(o_pairs)->excludes(o_char);
  o_pairs->excludes(o_char);

  auto* ts_cmd = app.add_subcommand("ts", "Thom-Sebastiani sum of two germs");
  ts_cmd->add_option("first", file, "Germ file for f")->required();
  ts_cmd->add_option("second", file_b, "Germ file for g")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "mhc: " << e.what() << '\n';
    return input_error;
  }

  const detail::Printer print{out, format == "machine"};
  try {
    if (poly_cmd->parsed()) {
      Poly p = parse_poly(expr);
      if (invert) p = invert_vars(p);
      if (specialize) {
        print.unipoly("specialized", specialize_v(p));
      } else {
        print.poly("poly", p);
      }
    } else if (class_cmd->parsed()) {
      print.poly("class", eval_class(parse_class(expr)));
    } else if (nearby_cmd->parsed()) {
      const Stratification s = io::stratification_from_json(io::read_json_file(file));
      const Poly psi = nearby_fibre(s);
      if (check_open) {
        const Poly open = nearby_fibre_open(s);
        if (open != psi) {
          err << "mhc: closed-strata form " << format_poly(psi) << " differs from open-strata form "
              << format_poly(open) << '\n';
          return computation_error;
        }
      }
      if (middle) {
        const HodgeStructure h = middle_hodge_numbers(psi, *middle);
        if (print.machine) {
          print.document(json{{"nearby", format_poly(psi)}, {"k", *middle}, {"hodge", io::to_json(h)}});
        } else {
          out << format_poly(psi) << '\n';
          detail::print_hodge_text(out, h);
        }
      } else {
        print.poly("nearby", psi);
      }
    } else if (vanishing_cmd->parsed()) {
      print.poly("vanishing", vanishing_fibre(io::stratification_from_json(io::read_json_file(file))));
    } else if (blowup_cmd->parsed()) {
      const Stratification s = io::stratification_from_json(io::read_json_file(file));
      const BlowupCenter c = io::blowup_center_from_json(io::read_json_file(move_file));
      const Stratification r = blowup_transform(s, c);
      if (print.machine) {
        print.document(io::to_json(r));
      } else {
        detail::print_stratification_text(out, r);
      }
    } else if (jordan_cmd->parsed()) {
      const WeightDims wd = io::weight_dims_from_json(detail::load_json_arg(file));
      const auto counts = jordan_block_counts(wd);
      if (print.machine) {
        json blocks = json::array();
        for (const auto& [m, c] : counts) blocks.push_back({{"size", m}, {"count", io::detail::integer_json(c)}});
        print.document(json{{"k", wd.degree()}, {"blocks", blocks}});
      } else if (counts.empty()) {
        out << "no Jordan blocks\n";
      } else {
        for (const auto& [m, c] : counts) out << "size " << m << ": " << c.str() << '\n';
      }
    } else if (spectrum_cmd->parsed()) {
      const io::Germ g = io::germ_from_json(io::read_json_file(file));
      const SpectrumTable table = m_invariants(g.milnor);
      if (auto neg = find_negative(table))
        throw PreconditionError("negative multiplicity at (" + to_string(neg->first) + ", " +
                                std::to_string(neg->second) + "): not the cohomology of a Milnor fibre");
      if (saito) {
        print.unipoly("saito", saito_spectrum(g.milnor));
      } else if (varchenko) {
        print.unipoly("varchenko", varchenko_spectrum(g.milnor));
      } else {
        const SpectrumTable shown = pairs ? spectral_pairs(table) : char_n ? characteristic_pairs(table, *char_n) : table;
        if (print.machine) {
          print.document(io::to_json(shown));
        } else {
          out << format_spectrum_text(shown);
        }
      }
    } else if (ts_cmd->parsed()) {
      const io::Germ f = io::germ_from_json(io::read_json_file(file));
      const io::Germ h = io::germ_from_json(io::read_json_file(file_b));
      io::Germ sum;
      sum.n = f.n + h.n + 1;
      const Poly phi = thom_sebastiani(f.vanishing(), h.vanishing());
      sum.milnor = sum.n % 2 == 0 ? phi : -phi;
      if (f.structure && h.structure) {
        sum.structure = convolution(*f.structure, *h.structure);
        if (equiv_hn_poly(*sum.structure) != sum.milnor)
          throw PreconditionError("convolution disagrees with the Thom-Sebastiani product");
      }
      if (print.machine) {
        print.document(io::to_json(sum));
      } else {
        out << format_poly(phi) << '\n';
      }
    }
  } catch (const PreconditionError& e) {
    err << "mhc: " << e.what() << '\n';
    return computation_error;
  } catch (const Error& e) {
    err << "mhc: " << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "mhc: internal error: " << e.what() << '\n';
    return computation_error;
  }
  return ok;
}

}  // namespace mhc::cli
