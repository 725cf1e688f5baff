// nh: exact computations in (affine) nil Hecke algebras and their parabolic
// corner algebras. See README.md for the command overview.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nh/expr.hpp"
#include "nh/json_io.hpp"
#include "nh/schubert.hpp"

using namespace nh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitInvalidInput = 2;

struct CommonOpts {
  std::string group = "A1";
  std::string parabolic;
  std::string convention = "paper";
  std::string format = "text";
  std::string out;
  long seed = 0;
};

ParabolicSubset parse_parabolic(const std::string& s) {
  std::vector<int> idx;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    idx.push_back(std::stoi(item));
  }
  return ParabolicSubset(idx);
}

Convention parse_convention(const std::string& s) {
  if (s == "paper") return Convention::paper;
  if (s == "classical") return Convention::classical;
  throw std::invalid_argument("unknown convention: " + s);
}

NHContextPtr context_of(const CommonOpts& opt) {
  return make_context(WeylGroup(datum_from_spec(opt.group)),
                      parse_convention(opt.convention));
}

void emit(const CommonOpts& opt, const std::string& text, const Json& json) {
  std::string payload = opt.format == "json" ? json.dump(2) + "\n" : text;
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + opt.out);
    f << payload;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_parabolic = true) {
  cmd->add_option("--group", opt.group, "group spec, e.g. A2 or B2");
  if (with_parabolic)
    cmd->add_option("--parabolic", opt.parabolic,
                    "comma-separated simple-reflection indices, 1-based");
  cmd->add_option("--convention", opt.convention, "paper | classical");
  cmd->add_option("--format", opt.format, "text | json");
  cmd->add_option("--out", opt.out, "output path (default stdout)");
  cmd->add_option("--seed", opt.seed, "seed for randomized runs");
}

int run(int argc, char** argv) {
  CLI::App app{"exact nil Hecke algebra calculator"};
  app.require_subcommand(1);

  // ---- apply ----
  CommonOpts apply_opt;
  std::string apply_expr, apply_poly;
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a polynomial");
  add_common(apply_cmd, apply_opt);
  apply_cmd->add_option("--expr", apply_expr, "operator expression")->required();
  apply_cmd->add_option("--poly", apply_poly, "polynomial in t1..tn")->required();

  // ---- normal-form ----
  CommonOpts nf_opt;
  std::string nf_expr;
  auto* nf_cmd = app.add_subcommand("normal-form", "delta-basis normal form");
  add_common(nf_cmd, nf_opt);
  nf_cmd->add_option("--expr", nf_expr, "operator expression")->required();

  // ---- mul ----
  CommonOpts mul_opt;
  std::vector<std::string> mul_exprs;
  auto* mul_cmd = app.add_subcommand("mul", "compose two operators");
  add_common(mul_cmd, mul_opt);
  mul_cmd->add_option("--expr", mul_exprs, "two operator expressions")
      ->expected(2);

  // ---- corner ----
  CommonOpts corner_opt;
  std::string corner_expr;
  auto* corner_cmd =
      app.add_subcommand("corner", "project into the corner algebra e_P NH e_P");
  add_common(corner_cmd, corner_opt);
  corner_cmd->add_option("--expr", corner_expr, "operator expression")->required();

  // ---- freeness ----
  CommonOpts free_opt;
  int free_maxdeg = 6;
  auto* free_cmd = app.add_subcommand(
      "freeness", "parabolic freeness experiment (open question harness)");
  add_common(free_cmd, free_opt);
  free_cmd->add_option("--max-degree", free_maxdeg, "degree bound");

  // ---- gkm ----
  CommonOpts gkm_opt;
  std::string gkm_mode = "member", gkm_input;
  int gkm_index = 1;
  auto* gkm_cmd = app.add_subcommand("gkm", "GKM presentation operations");
  add_common(gkm_cmd, gkm_opt);
  gkm_cmd->add_option("mode", gkm_mode,
                      "member | kk | tym | tym-corrected | localized")
      ->required();
  gkm_cmd->add_option("--input", gkm_input, "JSON input path ('-' = stdin)");
  gkm_cmd->add_option("--index", gkm_index, "simple reflection index");

  // ---- schubert ----
  CommonOpts schub_opt;
  int schub_n = 3;
  auto* schub_cmd = app.add_subcommand("schubert", "Schubert polynomial family");
  add_common(schub_cmd, schub_opt, false);
  schub_cmd->add_option("--n", schub_n, "symmetric group size (n <= 5)");

  // ---- flowup ----
  CommonOpts flow_opt;
  std::string flow_poly;
  int flow_maxdeg = 6;
  auto* flow_cmd =
      app.add_subcommand("flowup", "flow-up basis check for a seed polynomial");
  add_common(flow_cmd, flow_opt);
  flow_cmd->add_option("--poly", flow_poly, "seed polynomial")->required();
  flow_cmd->add_option("--max-degree", flow_maxdeg, "degree bound");

  // ---- coinvariant-dim ----
  CommonOpts coin_opt;
  int coin_maxdeg = -1;
  auto* coin_cmd = app.add_subcommand(
      "coinvariant-dim", "dimension of W_J-invariants modulo the invariant ideal");
  add_common(coin_cmd, coin_opt);
  coin_cmd->add_option("--max-degree", coin_maxdeg, "degree bound");

  // ---- reineke ----
  CommonOpts rk_opt;
  std::string rk_mode = "relations", rk_euler, rk_delta, rk_parabolic;
  int rk_d1 = 1, rk_d2 = 2, rk_length = 2, rk_maxdeg = 4;
  auto* rk_cmd = app.add_subcommand("reineke", "quiver-graded Steinberg example");
  add_common(rk_cmd, rk_opt, false);
  rk_cmd->add_option("mode", rk_mode, "relations | corner")->required();
  rk_cmd->add_option("--d1", rk_d1, "dimension d1");
  rk_cmd->add_option("--d2", rk_d2, "dimension d2");
  rk_cmd->add_option("--euler-range", rk_euler, "theta product indices");
  rk_cmd->add_option("--delta-indices", rk_delta, "Demazure generator indices");
  rk_cmd->add_option("--parabolic", rk_parabolic, "parabolic generator indices");
  rk_cmd->add_option("--length-bound", rk_length, "corner word length bound");
  rk_cmd->add_option("--max-degree", rk_maxdeg, "corner degree truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help prints and exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  if (apply_cmd->parsed()) {
    NHContextPtr ctx = context_of(apply_opt);
    NHElement h = evaluate_expr(*parse_expr(apply_expr), ctx);
    std::string perr;
    auto poly = Polynomial::parse(apply_poly, ctx->vars(), &perr);
    if (!poly) throw std::invalid_argument("bad polynomial: " + perr);
    Polynomial result = h.apply(*poly);
    Json j;
    j["result"] = poly_to_json(result);
    emit(apply_opt, result.str() + "\n", j);
    return kExitOk;
  }

  if (nf_cmd->parsed()) {
    NHContextPtr ctx = context_of(nf_opt);
    NHElement h = evaluate_expr(*parse_expr(nf_expr), ctx);
    emit(nf_opt, format_nh(h) + "\n", nh_to_json(h));
    return kExitOk;
  }

  if (mul_cmd->parsed()) {
    NHContextPtr ctx = context_of(mul_opt);
    NHElement a = evaluate_expr(*parse_expr(mul_exprs[0]), ctx);
    NHElement b = evaluate_expr(*parse_expr(mul_exprs[1]), ctx);
    NHElement prod = a * b;
    emit(mul_opt, format_nh(prod) + "\n", nh_to_json(prod));
    return kExitOk;
  }

  if (corner_cmd->parsed()) {
    NHContextPtr ctx = context_of(corner_opt);
    ParabolicSubset j = parse_parabolic(corner_opt.parabolic);
    NHElement h = evaluate_expr(*parse_expr(corner_expr), ctx);
    CornerElement c = CornerElement::project(h, j);
    Json out = nh_to_json(c.carrier());
    out["parabolic"] = j.indices;
    out["bimodule_invariant"] = bimodule_invariance_check(c.carrier(), j);
    emit(corner_opt, format_nh(c.carrier()) + "\n", out);
    return kExitOk;
  }

  if (free_cmd->parsed()) {
    NHContextPtr ctx = context_of(free_opt);
    ParabolicSubset j = parse_parabolic(free_opt.parabolic);
    FreenessReport rep = freeness_experiment(ctx, j, free_maxdeg);
    Json out = freeness_to_json(rep);
    std::ostringstream text;
    text << "r = " << rep.r << "\n";
    for (const auto& row : rep.per_degree)
      text << "degree " << row.degree << ": kernel " << row.kernel_dim
           << ", span " << row.span_count << " / " << row.free_prediction
           << "\n";
    text << rep.verdict << "\n";
    emit(free_opt, text.str(), out);
    return rep.independent() ? kExitOk : kExitPropertyFailed;
  }

  if (gkm_cmd->parsed()) {
    WeylGroup group(datum_from_spec(gkm_opt.group));
    Json input = Json::parse(read_input(gkm_input));
    if (gkm_mode == "localized") {
      FixedPointVector v = fixed_point_vector_from_json(group, input);
      FixedPointVector out = localized_apply(group, gkm_index, v);
      emit(gkm_opt, fixed_point_vector_to_json(out).dump(2) + "\n",
           fixed_point_vector_to_json(out));
      return kExitOk;
    }
    GKMClass cls = gkm_class_from_json(group, input);
    if (gkm_mode == "member") {
      auto rep = gkm_member(group, cls);
      Json out;
      out["member"] = rep.member;
      if (!rep.member) {
        out["witness_rep"] = rep.witness_rep;
        out["witness_s"] = rep.witness_s;
      }
      emit(gkm_opt, std::string(rep.member ? "member" : "not a member") + "\n",
           out);
      return rep.member ? kExitOk : kExitPropertyFailed;
    }
    if (gkm_mode == "tym") {
      TymReport rep = tym_apply_literal(group, gkm_index, cls);
      Json out;
      Json tuple = Json::array();
      for (const auto& p : rep.tuple) tuple.push_back(poly_to_json(p));
      out["tuple"] = std::move(tuple);
      out["member"] = rep.membership.member;
      if (!rep.membership.member) {
        out["witness_rep"] = rep.membership.witness_rep;
        out["witness_s"] = rep.membership.witness_s;
      }
      std::ostringstream text;
      text << "(";
      for (std::size_t k = 0; k < rep.tuple.size(); ++k)
        text << (k ? ", " : "") << rep.tuple[k].str();
      text << ") member: " << (rep.membership.member ? "true" : "false")
           << "\n";
      emit(gkm_opt, text.str(), out);
      return rep.membership.member ? kExitOk : kExitPropertyFailed;
    }
    if (gkm_mode == "kk" || gkm_mode == "tym-corrected") {
      try {
        GKMClass out = gkm_mode == "kk"
                           ? kk_apply(group, gkm_index, cls)
                           : tym_apply_corrected(group, gkm_index, cls);
        Json j = gkm_class_to_json(group, out);
        j["member"] = true;
        emit(gkm_opt, j.dump(2) + "\n", j);
        return kExitOk;
      } catch (const GKMDivisionError& err) {
        Json j;
        j["error"] = err.what();
        j["witness_rep"] = err.witness_rep;
        j["witness_s"] = err.witness_s;
        emit(gkm_opt, std::string(err.what()) + "\n", j);
        return kExitPropertyFailed;
      }
    }
    throw std::invalid_argument("unknown gkm mode: " + gkm_mode);
  }

  if (schub_cmd->parsed()) {
    if (schub_n < 2 || schub_n > 5)
      throw std::invalid_argument("schubert: need 2 <= n <= 5");
    WeylGroup group(CartanDatum::type_a(schub_n - 1));
    auto family = schubert_family(group, parse_convention(schub_opt.convention));
    Json out;
    out["n"] = schub_n;
    out["convention"] = schub_opt.convention;
    Json entries = Json::array();
    std::ostringstream text;
    for (const auto& [w, p] : family) {
      Json e;
      e["word"] = w.reduced_word();
      e["poly"] = poly_to_json(p);
      entries.push_back(std::move(e));
      text << "[";
      for (std::size_t k = 0; k < w.reduced_word().size(); ++k)
        text << (k ? "," : "") << w.reduced_word()[k];
      text << "] " << p.str() << "\n";
    }
    out["family"] = std::move(entries);
    emit(schub_opt, text.str(), out);
    return kExitOk;
  }

  if (flow_cmd->parsed()) {
    NHContextPtr ctx = context_of(flow_opt);
    ParabolicSubset j = parse_parabolic(flow_opt.parabolic);
    std::string perr;
    auto seed = Polynomial::parse(flow_poly, ctx->vars(), &perr);
    if (!seed) throw std::invalid_argument("bad polynomial: " + perr);
    FlowUpResult res = flowup_check(ctx, *seed, j, flow_maxdeg);
    Json out;
    out["ok"] = res.ok;
    out["valid_degree"] = res.valid_degree;
    if (!res.ok) {
      out["failed_degree"] = res.failed_degree;
      out["reason"] = res.reason;
    }
    Json gens = Json::array();
    for (const auto& [v, p] : res.generators) {
      Json g;
      g["word"] = v.reduced_word();
      g["poly"] = poly_to_json(p);
      gens.push_back(std::move(g));
    }
    out["generators"] = std::move(gens);
    std::ostringstream text;
    text << (res.ok ? "basis valid up to degree " +
                          std::to_string(res.valid_degree)
                    : "failure: " + res.reason)
         << "\n";
    emit(flow_opt, text.str(), out);
    return res.ok ? kExitOk : kExitPropertyFailed;
  }

  if (coin_cmd->parsed()) {
    WeylGroup group(datum_from_spec(coin_opt.group));
    ParabolicSubset j = parse_parabolic(coin_opt.parabolic);
    int maxdeg = coin_maxdeg > 0 ? coin_maxdeg
                                 : group.longest().length() + 1;
    CoinvariantResult res = coinvariant_dimension(group, j, maxdeg);
    Json out;
    out["dimension"] = res.total;
    out["per_degree"] = res.dims;
    out["stabilized"] = res.stabilized;
    emit(coin_opt, std::to_string(res.total) + "\n", out);
    return res.stabilized ? kExitOk : kExitPropertyFailed;
  }

  if (rk_cmd->parsed()) {
    ReinekeConfig cfg = ReinekeConfig::defaults(rk_d1, rk_d2);
    if (!rk_euler.empty()) cfg.euler_range = parse_parabolic(rk_euler).indices;
    if (!rk_delta.empty()) cfg.delta_indices = parse_parabolic(rk_delta).indices;
    if (!rk_parabolic.empty())
      cfg.parabolic_indices = parse_parabolic(rk_parabolic).indices;
    cfg.validate();
    NHContextPtr ctx = make_context(
        WeylGroup(CartanDatum::type_a(cfg.d() - 1)),
        parse_convention(rk_opt.convention));
    if (rk_mode == "relations") {
      auto idem = build_idempotent(ctx, cfg);
      auto reports = verify_relations(ctx, cfg);
      Json out;
      out["d1"] = cfg.d1;
      out["d2"] = cfg.d2;
      out["prefactor_consistent"] = idem.consistent;
      if (!idem.warning.empty()) out["warning"] = idem.warning;
      Json rels = Json::array();
      bool all = idem.consistent;
      std::ostringstream text;
      for (const auto& r : reports) {
        rels.push_back(relation_to_json(r));
        all = all && r.holds;
        text << r.relation << ": " << (r.holds ? "holds" : "FAILS") << "\n";
      }
      out["relations"] = std::move(rels);
      emit(rk_opt, text.str(), out);
      return all ? kExitOk : kExitPropertyFailed;
    }
    if (rk_mode == "corner") {
      auto rep = corner_presentation(ctx, cfg, rk_length, rk_maxdeg);
      Json out = corner_presentation_to_json(rep);
      std::ostringstream text;
      text << "words: " << rep.words << "\n";
      for (const auto& [deg, dim] : rep.per_degree)
        text << "degree " << deg << ": dim " << dim << "\n";
      text << "closed (up to degree " << rep.closure_trusted_degree
           << "): " << (rep.closed ? "yes" : "no") << "\n";
      emit(rk_opt, text.str(), out);
      return kExitOk;
    }
    throw std::invalid_argument("unknown reineke mode: " + rk_mode);
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}
