#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgr/cgr.hpp"

namespace cgr::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  file << text;
}

inline std::string list_of(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

inline std::string rational_str(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// "random:7", "random(7)", "hex:1f3" or bare hex digits.
inline BitVector parse_data(const std::string& spec, std::size_t n) {
  auto number_after = [&](std::size_t pos) {
    std::string digits = spec.substr(pos);
    if (!digits.empty() && digits.back() == ')') digits.pop_back();
    return static_cast<std::uint64_t>(std::stoull(digits));
  };
  if (spec.rfind("random:", 0) == 0) return random_bits(number_after(7), n);
  if (spec.rfind("random(", 0) == 0) return random_bits(number_after(7), n);
  if (spec.rfind("hex:", 0) == 0) return parse_hex_bits(spec.substr(4), n);
  return parse_hex_bits(spec, n);
}

/// Offset vector used by `metrics` for a given v1: the first published
/// vector when one exists, otherwise the identity PIF derivation.
inline OffsetVector metrics_offsets(std::size_t v1) {
  for (const auto& f : published_fixtures()) {
    if (f.v1 == v1) return f.completed();
  }
  return derive_offsets(pif_factorize(v1), identity_pi(v1));
}

}  // namespace detail

/// Runs one CLI invocation. argv[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complete-graph-of-rings MDS array codes"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Build a CGR array code");
  std::optional<std::size_t> gen_v1;
  bool gen_pif = false;
  std::string gen_placement, gen_pi, gen_offsets, gen_table1, gen_format = "json", gen_output;
  gen->add_option("--v1", gen_v1, "Number of rings (even, >= 2)");
  gen->add_flag("--pif", gen_pif, "Derive offsets from the wheel one-factorization");
  gen->add_option("--placement", gen_placement, "Rim labels, e.g. 0,1,2,3,inf (with --pif)");
  gen->add_option("--pi", gen_pi, "Offset for each finite factor center, e.g. 1,3,0,2 (with --pif)");
  gen->add_option("--offsets", gen_offsets, "Explicit offset vector");
  gen->add_option("--table1", gen_table1, "Published offset vector: k2 k4a k4b k4c k4d k6a k6b k6c k8");
  gen->add_option("--format", gen_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  gen->add_option("-o,--output", gen_output, "Write to file instead of stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "Exhaustively check the MDS property");
  std::string ver_file;
  bool ver_json = false;
  ver->add_option("file", ver_file, "Code file ('-' for stdin)")->required();
  ver->add_flag("--json", ver_json, "Machine-readable report");

  // roundtrip
  auto* rt = app.add_subcommand("roundtrip", "Encode, erase columns, decode, compare");
  std::string rt_file, rt_erase, rt_data = "random:1";
  bool rt_json = false;
  rt->add_option("file", rt_file, "Code file")->required();
  rt->add_option("--erase", rt_erase, "Comma-separated erased columns");
  rt->add_option("--data", rt_data, "hex:<digits> or random:<seed>");
  rt->add_flag("--json", rt_json, "Machine-readable report");

  // dual
  auto* du = app.add_subcommand("dual", "Swap vertex and edge roles");
  std::string du_file, du_format = "json";
  du->add_option("file", du_file, "Code file")->required();
  du->add_option("--format", du_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // contract
  auto* co = app.add_subcommand("contract", "Contract to the B-code on the ring leaders");
  std::string co_file, co_order;
  bool co_json = false;
  co->add_option("file", co_file, "Code file")->required();
  co->add_option("--order", co_order, "Parent column order for presentation, e.g. 0,6,5,4,1");
  co->add_flag("--json", co_json, "JSON output");

  // metrics
  auto* me = app.add_subcommand("metrics", "Update and decoding complexity");
  std::size_t me_from = 2, me_to = 10;
  bool me_json = false;
  me->add_option("--from", me_from, "Smallest v1");
  me->add_option("--to", me_to, "Largest v1");
  me->add_flag("--json", me_json, "JSON output");

  // search
  auto* se = app.add_subcommand("search", "Search for MDS offset vectors");
  std::size_t se_v1 = 2, se_stop = 0;
  bool se_free = false, se_json = false, se_exhaustive = false;
  std::optional<std::uint64_t> se_seed;
  std::uint64_t se_trials = 1000;
  se->add_option("--v1", se_v1, "Number of rings")->required();
  se->add_flag("--free-prefix", se_free, "Let the vertex and ring-edge rows vary too");
  se->add_flag("--exhaustive", se_exhaustive, "Enumerate the whole space");
  se->add_option("--random", se_seed, "Random search with this seed");
  se->add_option("--trials", se_trials, "Random trials");
  se->add_option("--stop-after", se_stop, "Stop after this many hits (0 = all)");
  se->add_flag("--json", se_json, "JSON output");

  // factorize
  auto* fa = app.add_subcommand("factorize", "Print the wheel one-factorization of K_{v1+2}");
  std::size_t fa_v1 = 4;
  std::string fa_placement;
  fa->add_option("--v1", fa_v1, "Number of rings")->required();
  fa->add_option("--placement", fa_placement, "Rim labels, e.g. 0,1,2,3,inf");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      const int sources = int(gen_pif) + int(!gen_offsets.empty()) + int(!gen_table1.empty());
      if (sources != 1) {
        err << "generate: choose exactly one of --pif, --offsets, --table1\n";
        return kUsage;
      }
      if (!gen_pif && (!gen_placement.empty() || !gen_pi.empty())) {
        err << "generate: --placement and --pi require --pif\n";
        return kUsage;
      }
      OffsetVector offsets;
      std::size_t v1 = 0;
      if (!gen_table1.empty()) {
        const OffsetFixture& f = published_fixture(gen_table1);
        if (gen_v1 && *gen_v1 != f.v1) {
          err << "generate: fixture " << f.name << " is for v1=" << f.v1 << '\n';
          return kUsage;
        }
        v1 = f.v1;
        offsets = f.completed();
      } else {
        if (!gen_v1) {
          err << "generate: --v1 is required\n";
          return kUsage;
        }
        v1 = *gen_v1;
        if (gen_pif) {
          CgrParams::from_v1(v1);
          const auto placement = gen_placement.empty() ? identity_placement(v1) : parse_placement(gen_placement);
          const auto pi = gen_pi.empty() ? identity_pi(v1) : parse_uint_list(gen_pi);
          offsets = derive_offsets(pif_factorize(v1, placement), pi);
        } else {
          offsets = OffsetVector{parse_uint_list(gen_offsets)};
        }
      }
      const CodeArray code = make_code(CgrParams::from_v1(v1), offsets);
      detail::write_output(gen_output, gen_format == "text" ? render_text(code) : serialize(code), out);
      return kOk;
    }

    if (ver->parsed()) {
      const CodeArray code = deserialize(detail::read_input(ver_file));
      Json report;
      bool ok = true;
      if (code.role == CodeRole::kPrimal) {
        const MdsVerdict primal = verify_mds(code);
        const MdsVerdict dual = verify_dual_mds(code);
        ok = primal.mds;
        report["mds"] = primal.mds;
        report["patterns_checked"] = primal.patterns_checked;
        report["witness"] = primal.witness ? Json(primal.witness->columns()) : Json(nullptr);
        report["dual_mds"] = dual.mds;
        report["dual_witness"] = dual.witness ? Json(dual.witness->columns()) : Json(nullptr);
      } else {
        const MdsVerdict dual = verify_dual_mds(code);
        ok = dual.mds;
        report["dual_mds"] = dual.mds;
        report["patterns_checked"] = dual.patterns_checked;
        report["dual_witness"] = dual.witness ? Json(dual.witness->columns()) : Json(nullptr);
      }
      if (ver_json) {
        out << report.dump() << '\n';
      } else {
        if (report.contains("mds")) {
          out << "MDS: " << (report["mds"].get<bool>() ? "yes" : "no");
          if (!report["witness"].is_null()) {
            out << " (witness: erased columns " << detail::list_of(report["witness"].get<std::vector<std::size_t>>())
                << ")";
          }
          out << '\n';
        }
        out << "dual MDS: " << (report["dual_mds"].get<bool>() ? "yes" : "no");
        if (!report["dual_witness"].is_null()) {
          out << " (witness: erased columns "
              << detail::list_of(report["dual_witness"].get<std::vector<std::size_t>>()) << ")";
        }
        out << '\n';
      }
      return ok ? kOk : kVerifyFailed;
    }

    if (rt->parsed()) {
      const CodeArray code = deserialize(detail::read_input(rt_file));
      std::vector<std::size_t> cols;
      for (auto c : parse_uint_list(rt_erase)) cols.push_back(c);
      const ErasurePattern pattern(cols);
      const BitVector data = detail::parse_data(rt_data, code.variable_count());
      const Codeword word = encode(code, std::span<const std::uint8_t>(data));
      CellGrid received = word.cell_values;
      for (auto& row : received) {
        for (std::size_t c : pattern.columns()) {
          if (c < row.size()) row[c] = 0;
        }
      }
      Json report;
      try {
        const DecodeReport rep = decode(code, received, pattern);
        report["equal"] = rep.recovered == word.info_bits;
        report["peeling_sufficed"] = rep.peeling_sufficed;
        report["xor_count"] = rep.xor_count;
        report["elimination_row_ops"] = rep.elimination_row_ops;
        report["decode_complexity"] = detail::rational_str(decode_complexity(rep, code.params, pattern));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kUnrecoverable) throw;
        report["equal"] = false;
        report["error"] = "UNRECOVERABLE";
      }
      if (rt_json) {
        out << report.dump() << '\n';
      } else {
        for (const auto& [k, v] : report.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      return report["equal"].get<bool>() ? kOk : kVerifyFailed;
    }

    if (du->parsed()) {
      const CodeArray dual = dualize(deserialize(detail::read_input(du_file)));
      out << (du_format == "text" ? render_text(dual) : serialize(dual));
      return kOk;
    }

    if (co->parsed()) {
      const CodeArray code = deserialize(detail::read_input(co_file));
      std::vector<std::size_t> order;
      for (auto c : parse_uint_list(co_order)) order.push_back(c);
      const ContractedArray c = contract(code, order);
      const bool mds = verify_contracted_mds(c);
      if (co_json) {
        Json j = to_json(c);
        j["mds"] = mds;
        out << j.dump() << '\n';
      } else {
        out << render_text(c) << "MDS: " << (mds ? "yes" : "no") << '\n';
      }
      return mds ? kOk : kVerifyFailed;
    }

    if (me->parsed()) {
      Json rows = Json::array();
      for (std::size_t v1 = me_from; v1 <= me_to; v1 += 2) {
        const CgrParams p = CgrParams::from_v1(v1);
        const CodeArray code = make_code(p, detail::metrics_offsets(v1));
        const Codeword word = encode(code, std::span<const std::uint8_t>(random_bits(1, p.vertex_count())));
        std::optional<Rational> worst;
        for (std::size_t c = 0; c < p.columns(); ++c) {
          const ErasurePattern pattern({c});
          try {
            const Rational r = decode_complexity(decode(code, word.cell_values, pattern), p, pattern);
            if (!worst || r > *worst) worst = r;
          } catch (const Error&) {
          }
        }
        Json row;
        row["code"] = "K_" + std::to_string(v1) + " C_" + std::to_string(p.v2()) + " (" + std::to_string(p.v2()) + ",2)";
        row["update_complexity"] = detail::rational_str(update_complexity(p));
        row["decode_complexity"] = worst ? Json(detail::rational_str(*worst)) : Json(nullptr);
        rows.push_back(row);
      }
      if (me_json) {
        out << rows.dump() << '\n';
      } else {
        for (const auto& r : rows) {
          out << r["code"].get<std::string>() << "\tupdate " << r["update_complexity"].get<std::string>()
              << "\tdecode " << (r["decode_complexity"].is_null() ? "n/a" : r["decode_complexity"].get<std::string>())
              << '\n';
        }
      }
      return kOk;
    }

    if (se->parsed()) {
      if (se_exhaustive == se_seed.has_value()) {
        err << "search: choose exactly one of --exhaustive, --random <seed>\n";
        return kUsage;
      }
      SearchSpec spec{CgrParams::from_v1(se_v1)};
      spec.fix_prefix = !se_free;
      spec.stop_after = se_stop;
      if (const char* budget = std::getenv("CGR_BUDGET")) spec.budget = std::stoull(budget);
      if (se_seed) {
        spec.strategy = SearchStrategy::kRandom;
        spec.seed = *se_seed;
        spec.max_trials = se_trials;
      }
      const SearchResult res = search(spec);
      Json j;
      j["space_size"] = res.stats.space_size;
      j["trials"] = res.stats.trials;
      j["hits"] = res.stats.hits;
      j["exact_valid_count"] = res.stats.exact_valid_count ? Json(*res.stats.exact_valid_count) : Json(nullptr);
      Json vecs = Json::array();
      for (const auto& v : res.vectors) vecs.push_back(v.values);
      j["vectors"] = vecs;
      if (se_json) {
        out << j.dump() << '\n';
      } else {
        out << "space " << res.stats.space_size << ", trials " << res.stats.trials << ", hits " << res.stats.hits << '\n';
        for (const auto& v : res.vectors) out << join(v.values) << '\n';
      }
      return kOk;
    }

    if (fa->parsed()) {
      const auto placement = fa_placement.empty() ? identity_placement(fa_v1) : parse_placement(fa_placement);
      const Factorization f = pif_factorize(fa_v1, placement);
      for (const Factor& factor : f.factors) {
        out << "(-inf, " << factor.center.str() << ")\t";
        const auto diags = factor.diagonals();
        for (std::size_t i = 0; i < diags.size(); ++i) {
          out << (i ? " " : "") << '(' << diags[i].a.str() << ", " << diags[i].b.str() << ')';
        }
        out << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kUnrecoverable:
      case ErrorCode::kContractShape:
        return kVerifyFailed;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace cgr::cli
