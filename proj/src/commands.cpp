#include "lgb/commands.hpp"

#include <ostream>

#include "lgb/affinoid.hpp"
#include "lgb/errors.hpp"
#include "lgb/groebner.hpp"
#include "lgb/oracle.hpp"
#include "lgb/reduction.hpp"

namespace lgb {

std::unique_ptr<TermOrder> make_term_order(const ProblemFile& problem, const std::optional<mpq_class>& precision,
                                           std::int64_t search_radius) {
  const std::size_t n = problem.vars.size();
  const GeneralizedOrder base = GeneralizedOrder::named(problem.order, n);
  const std::optional<mpq_class> requested = precision ? precision : problem.precision;
  if (!problem.weight && !problem.polytope) {
    if (requested) throw UsageError("precision applies only to weight and polytope problems");
    return std::make_unique<MonomialOrder>(base, search_radius);
  }
  const mpq_class cap = requested.value_or(kDefaultPrecision);
  if (problem.polytope) return std::make_unique<PolytopeOrder>(PolytopeContext(*problem.polytope), base, cap, search_radius);
  return std::make_unique<WeightOrder>(WeightContext(*problem.weight), base, cap, search_radius);
}

namespace {

LaurentPoly parse_option_poly(const CommandOptions& options, const ProblemFile& problem) {
  if (!options.poly) throw UsageError("this command needs --poly");
  try {
    return parse_polynomial(*options.poly, *problem.field, problem.vars);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--poly: ") + e.what(), e.line(), e.column());
  }
}

std::string format_generators(const std::vector<ExponentVec>& gens, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return out;
}

int info(const TermOrder& order, const ProblemFile& problem, const LaurentPoly& f, std::ostream& out) {
  const auto& vars = problem.vars;
  if (f.is_zero()) throw UndefinedLeading();
  const LeadingData lead = order.leading(f);
  out << "lm: " << format_monomial(lead.lm, vars) << "\n";
  out << "lc: " << lead.lc.str() << "\n";
  if (const auto* w = dynamic_cast<const WeightOrder*>(&order)) {
    const auto v = val_weight(w->context(), f);
    out << "val_r: " << v.value.str() << "\n";
    out << "in_r: " << format_polynomial(v.initial, vars, &order) << "\n";
  }
  if (const auto* p = dynamic_cast<const PolytopeOrder*>(&order)) {
    const auto v = val_polytope(p->context(), f);
    out << "val_P: " << v.value.str() << "\n";
    out << "I_P:";
    for (auto i : v.attained) out << " " << i + 1;
    out << "\n";
    out << "in_P: " << format_polynomial(lm_polytope(*p, f).initial, vars, &order) << "\n";
  }
  for (std::size_t k = 0; k < order.cone_count(); ++k) {
    const ConeData data = order.cone_data(f, k);
    const std::string label = order.cone_label(k);
    out << "lm_" << label << ": " << format_monomial(data.lm, vars) << "\n";
    out << "T_" << label << "(f): " << format_generators(data.generators, vars) << "\n";
  }
  return kExitOk;
}

int dispatch(const CommandOptions& options, std::ostream& out) {
  const ProblemFile problem = parse_problem(options.problem_text);
  const auto order = make_term_order(problem, options.precision, options.search_radius);
  const auto& vars = problem.vars;
  auto print = [&](const LaurentPoly& f) { out << format_polynomial(f, vars, order.get()) << "\n"; };
  const auto& gens = problem.generators;

  if (options.verb == "gb") {
    GBConfig cfg;
    cfg.max_basis = options.max_basis;
    cfg.normalize = options.normalize;
    for (const auto& g : buchberger(*order, gens, cfg).basis) print(g);
    return kExitOk;
  }
  if (options.verb == "reduce") {
    const LaurentPoly f = parse_option_poly(options, problem);
    const DivisionResult div = reduce(*order, f, gens);
    print(div.remainder);
    for (const auto& q : div.quotients) print(q);
    return kExitOk;
  }
  if (options.verb == "member") {
    const LaurentPoly f = parse_option_poly(options, problem);
    bool member = order->truncate(f).is_zero();
    if (!member && !gens.empty()) {
      GBConfig cfg;
      cfg.max_basis = options.max_basis;
      member = ideal_membership(*order, f, buchberger(*order, gens, cfg).basis);
    }
    out << (member ? "true" : "false") << "\n";
    return member ? kExitOk : kExitNegative;
  }
  if (options.verb == "check") {
    const GroebnerCertificate cert = is_groebner(*order, gens);
    if (cert.is_groebner) {
      out << "true (" << cert.spairs_checked << " S-pairs checked)\n";
      return kExitOk;
    }
    const auto& fail = *cert.failure;
    out << "false: S-pair of generators " << fail.first + 1 << " and " << fail.second + 1 << " on cone "
        << order->cone_label(fail.cone) << " at " << format_monomial(fail.collision, vars) << " leaves "
        << format_polynomial(fail.remainder, vars, order.get()) << "\n";
    return kExitNegative;
  }
  if (options.verb == "info") return info(*order, problem, parse_option_poly(options, problem), out);
  throw UsageError("unknown command '" + options.verb + "'");
}

}  // namespace

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.verb == "selftest") return oracle::run_selftest(out) ? kExitOk : kExitMath;
    return dispatch(options, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMath;
  }
}

}  // namespace lgb
