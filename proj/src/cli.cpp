#include "almostchar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "almostchar/almost.hpp"
#include "almostchar/error.hpp"
#include "almostchar/json_io.hpp"

namespace almostchar {

namespace {

struct Emitter {
  std::ostream& out;
  const Config& cfg;

  void json(const Json& j) const { out << dump(j) << '\n'; }

  void value(const HalfLaurent& x) const {
    switch (cfg.format) {
      case OutputFormat::Json: json(to_json(x)); break;
      case OutputFormat::Csv:
        out << "halfexp,num,den\n";
        for (const auto& [e, c] : x.terms()) out << e << ',' << c.get_num() << ',' << c.get_den() << '\n';
        break;
      case OutputFormat::Plain: out << x.to_string() << '\n'; break;
    }
  }

  int report(const VerificationReport& rep) const {
    switch (cfg.format) {
      case OutputFormat::Json: json(to_json(rep, cfg.timing)); break;
      case OutputFormat::Csv:
        out << "claim,verdict,value_at_1,value\n"
            << rep.claim << ',' << verdict_name(rep.verdict) << ',' << rational_string(rep.value.eval_one()) << ",\""
            << rep.value.to_string() << "\"\n";
        break;
      case OutputFormat::Plain:
        out << rep.claim << ' ' << dump(rep.params) << ": " << verdict_name(rep.verdict)
            << " (value = " << rep.value.to_string() << ")\n";
        break;
    }
    return rep.passed() ? kExitOk : kExitVerificationFailed;
  }

  void bipartitions(const std::vector<BiPartition>& list) const {
    switch (cfg.format) {
      case OutputFormat::Json: {
        Json arr = Json::array();
        for (const auto& bp : list) arr.push_back(to_json(bp));
        json(arr);
        break;
      }
      case OutputFormat::Csv:
        out << "alpha,beta\n";
        for (const auto& bp : list) out << bp.alpha.to_string() << ',' << bp.beta.to_string() << '\n';
        break;
      case OutputFormat::Plain:
        for (const auto& bp : list) out << bp.to_string() << '\n';
        break;
    }
  }
};

Symbol symbol_arg(const std::string& s, const std::string& t) {
  return Symbol::canonical(parse_int_list(s), parse_int_list(t));
}

Json rational_matrix(const std::vector<std::vector<Rational>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json symbol_info(const Symbol& x, Kind kind) {
  Json out = to_json(x);
  out["kind"] = std::string(kind_name(kind));
  out["rank"] = x.rank();
  out["defect"] = x.defect();
  out["degenerate"] = x.is_degenerate();
  if (kind == Kind::D && x.is_degenerate()) {
    out["m2"] = m2_unipotent(x, kind);
    return out;
  }
  const FamilyDecomposition fd = family_decompose(x, kind);
  out["Z1"] = fd.z1;
  out["Z2"] = fd.z2;
  out["M"] = fd.m;
  out["M0"] = fd.m0;
  out["d1"] = fd.d1;
  out["f"] = fd.f;
  out["special"] = is_special(x, kind);
  out["m2"] = m2_unipotent(x, kind);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg = Config::from_environment();
  CLI::App app{"Exact symbols, families, Hecke traces and almost-character coefficients", "almostchar"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--workers", cfg.workers, "worker threads (default: ALMOSTCHAR_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-rank", cfg.max_rank, "largest rank evaluated before exiting with code 3")
      ->check(CLI::PositiveNumber);
  app.add_option("--memo-budget", cfg.memo_budget, "memo entry cap per evaluator (0 = unlimited)");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit the \"ms\" field from reports");

  std::function<int()> action;
  const Emitter emit{out, cfg};

  std::string kind_text = "B";
  std::string s_text = "[]";
  std::string t_text = "[]";
  std::string cycles_text = "[]";
  std::string lambda_text;
  int n = 0;
  int d = 1;
  int a = 0;
  int b = 0;
  bool unordered = false;
  std::vector<int> dims;

  auto add_kind = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--kind", kind_text, "B or D");
    if (required) opt->required();
  };

  // symbol
  auto* symbol = app.add_subcommand("symbol", "symbol operations")->require_subcommand(1);
  auto* symbol_info_cmd = symbol->add_subcommand("info", "rank, defect, family data, specialness, m2");
  symbol_info_cmd->add_option("--S", s_text)->required();
  symbol_info_cmd->add_option("--T", t_text)->required();
  add_kind(symbol_info_cmd);
  symbol_info_cmd->callback([&] {
    action = [&] {
      emit.json(symbol_info(symbol_arg(s_text, t_text), parse_kind(kind_text)));
      return int{kExitOk};
    };
  });

  // family
  auto* family = app.add_subcommand("family", "families of symbols")->require_subcommand(1);
  auto* family_list = family->add_subcommand("list", "all families of rank n");
  family_list->add_option("--n", n)->required();
  add_kind(family_list);
  family_list->callback([&] {
    action = [&] {
      check_rank_guard(n, cfg);
      const Kind kind = parse_kind(kind_text);
      Json arr = Json::array();
      for (const auto& fam : enumerate_families(n, kind)) arr.push_back(to_json(fam, kind));
      emit.json(arr);
      return int{kExitOk};
    };
  });
  auto* family_matrix = family->add_subcommand("pairing-matrix", "Fourier matrix of the family of a symbol");
  family_matrix->add_option("--S", s_text)->required();
  family_matrix->add_option("--T", t_text)->required();
  add_kind(family_matrix);
  family_matrix->callback([&] {
    action = [&] {
      const Kind kind = parse_kind(kind_text);
      const Symbol x = symbol_arg(s_text, t_text);
      const FamilyDecomposition fd = family_decompose(x, kind);
      Family fam{fd.z1, fd.z2, fd.members(), false};
      Json doc = to_json(fam, kind);
      doc["matrix"] = rational_matrix(pairing_matrix(fam, kind));
      emit.json(doc);
      return int{kExitOk};
    };
  });
  auto* family_inv = family->add_subcommand("involution-check", "S*S = I for every family of rank n");
  family_inv->add_option("--n", n)->required();
  add_kind(family_inv);
  family_inv->callback([&] {
    action = [&] { return emit.report(involution_check(n, parse_kind(kind_text), cfg)); };
  });

  // mn eval
  auto* mn = app.add_subcommand("mn", "Murnaghan-Nakayama evaluation")->require_subcommand(1);
  auto* mn_eval = mn->add_subcommand("eval", "Tr(T_w, E_u^lambda)");
  add_kind(mn_eval);
  mn_eval->add_option("--lambda", lambda_text, "[[alpha],[beta]]")->required();
  mn_eval->add_option("--cycles", cycles_text, "signed cycle lengths, negative = barred")->required();
  mn_eval->callback([&] {
    action = [&] {
      const Kind kind = parse_kind(kind_text);
      const BrSequence br = BrSequence::from_cycles(kind, cycles_from_signed(parse_int_list(cycles_text)));
      check_rank_guard(br.n(), cfg);
      TraceEvaluator eval(br, cfg.memo_budget);
      emit.value(eval.trace(bipartition_from_json(Json::parse(lambda_text))));
      return int{kExitOk};
    };
  });

  // flambda
  auto* flambda = app.add_subcommand("flambda", "coefficient f_Lambda(w) of an almost character");
  add_kind(flambda);
  flambda->add_option("--S", s_text)->required();
  flambda->add_option("--T", t_text)->required();
  flambda->add_option("--cycles", cycles_text)->required();
  flambda->callback([&] {
    action = [&] {
      const Kind kind = parse_kind(kind_text);
      const BrSequence br = BrSequence::from_cycles(kind, cycles_from_signed(parse_int_list(cycles_text)));
      emit.value(f_lambda(kind, symbol_arg(s_text, t_text), br, cfg));
      return int{kExitOk};
    };
  });

  // fab
  auto* fab = app.add_subcommand("fab", "signed rectangle sum f_{a,b}(w)");
  fab->add_option("--a", a)->required();
  fab->add_option("--b", b)->required();
  fab->add_option("--cycles", cycles_text)->required();
  add_kind(fab, false);
  fab->callback([&] {
    action = [&] {
      const Kind kind = fab->count("--kind") ? parse_kind(kind_text) : (a == b ? Kind::D : Kind::B);
      const BrSequence br = BrSequence::from_cycles(kind, cycles_from_signed(parse_int_list(cycles_text)));
      emit.value(f_ab(a, b, kind, br, cfg));
      return int{kExitOk};
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "machine-checked claims")->require_subcommand(1);
  auto* v713 = verify->add_subcommand("prop713", "nonvanishing of f for the type B cuspidal symbol");
  v713->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  v713->callback([&] { action = [&] { return emit.report(verify_nonvanishing(Kind::B, d, cfg)); }; });
  auto* v714 = verify->add_subcommand("prop714", "nonvanishing of f for the type D cuspidal symbol");
  v714->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  v714->callback([&] { action = [&] { return emit.report(verify_nonvanishing(Kind::D, d, cfg)); }; });
  auto* vrec = verify->add_subcommand("recursion", "f_{a,b} = h * f_{a-4,b-4} with h(1) = 0");
  vrec->add_option("--a", a)->required();
  vrec->add_option("--b", b)->required();
  vrec->add_option("--cycles", cycles_text)->required();
  add_kind(vrec, false);
  vrec->callback([&] {
    action = [&] {
      const auto cycles = cycles_from_signed(parse_int_list(cycles_text));
      if (vrec->count("--kind")) return emit.report(recursion_check(a, b, cycles, parse_kind(kind_text), cfg));
      return emit.report(recursion_check(a, b, cycles, cfg));
    };
  });
  auto* vorth = verify->add_subcommand("orthogonality", "column orthogonality of type B traces at u = 1");
  vorth->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  vorth->callback([&] { action = [&] { return emit.report(orthogonality_check(n, cfg)); }; });
  auto* vm2 = verify->add_subcommand("m2", "sum of pairings against m2 equals 1");
  vm2->add_option("--n", n)->required();
  add_kind(vm2, false);
  vm2->callback([&] { action = [&] { return emit.report(m2_check(n, parse_kind(kind_text), cfg)); }; });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "combinatorial enumerations")->require_subcommand(1);
  auto* pab = enumerate->add_subcommand("pab", "bipartitions in the rectangle set P^{a,b}");
  pab->add_option("--a", a);
  pab->add_option("--b", b);
  pab->add_option("dims", dims, "a b (positional form)")->expected(0, 2);
  pab->add_flag("--unordered", unordered, "identify (alpha,beta) with (beta,alpha)");
  pab->callback([&] {
    action = [&] {
      if (!dims.empty()) {
        if (dims.size() != 2) throw InvalidInput("enumerate pab takes two positional sizes");
        a = dims[0];
        b = dims[1];
      }
      emit.bipartitions(enumerate_P_ab(a, b, unordered));
      return int{kExitOk};
    };
  });

  // diagnose
  auto* diagnose = app.add_subcommand("diagnose", "diagnostics that report without asserting")->require_subcommand(1);
  auto* dswap = diagnose->add_subcommand("d-swap", "type D traces of (alpha,beta) vs (beta,alpha)");
  dswap->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  dswap->callback([&] {
    action = [&] {
      const auto asym = d_swap_diagnostic(n, cfg);
      Json doc;
      doc["n"] = n;
      doc["asymmetries"] = Json::array();
      for (const auto& x : asym) {
        Json e;
        e["lambda"] = to_json(x.lambda);
        e["cycles"] = cycles_to_signed(x.cycles);
        e["value"] = to_json(x.value);
        e["swapped"] = to_json(x.swapped_value);
        doc["asymmetries"].push_back(std::move(e));
      }
      doc["symmetric"] = asym.empty();
      emit.json(doc);
      return int{kExitOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  cfg.format = format == "csv" ? OutputFormat::Csv : format == "plain" ? OutputFormat::Plain : OutputFormat::Json;
  cfg.timing = !no_timing;

  try {
    return action ? action() : kExitInvalidInput;
  } catch (const ResourceGuard& e) {
    err << "resource guard: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const nlohmann::ordered_json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace almostchar
