#include "lgb/groebner.hpp"

#include <deque>
#include <stdexcept>

#include "lgb/errors.hpp"

namespace lgb {

namespace {

LaurentPoly spair_formula(const ConeData& df, const ConeData& dg, const LaurentPoly& f, const LaurentPoly& g,
                          const ExponentVec& v) {
  return f.mul_term(dg.lc, v - df.lm) - g.mul_term(df.lc, v - dg.lm);
}

// The bound lt(S) < lc_k(f)·lc_k(g)·X^v on a freshly formed S-polynomial.
void check_spair_bound(const TermOrder& order, const LaurentPoly& s, const ConeData& df, const ConeData& dg, const ExponentVec& v) {
  if (s.is_zero()) return;
  const LeadingData lead = order.leading(s);
  if (order.compare(lead.lc, lead.lm, df.lc * dg.lc, v) >= 0)
    throw std::logic_error("S-polynomial leading term is not below its collision term at " + v.str());
}

struct Workspace {
  const TermOrder& order;
  std::vector<LaurentPoly> basis;
  std::vector<std::vector<ConeData>> data;  // [element][cone]
  LeadingCache cache;

  void push(LaurentPoly h) {
    std::vector<ConeData> per_cone;
    std::vector<LeadingData> leads;
    for (std::size_t k = 0; k < order.cone_count(); ++k) {
      per_cone.push_back(order.cone_data(h, k));
      leads.push_back({per_cone.back().lm, per_cone.back().lc});
    }
    basis.push_back(std::move(h));
    data.push_back(std::move(per_cone));
    cache.push_back(std::move(leads));
  }
};

}  // namespace

LaurentPoly spair(const TermOrder& order, std::size_t k, const LaurentPoly& f, const LaurentPoly& g, const ExponentVec& v) {
  if (f.is_zero() || g.is_zero()) throw UndefinedLeading();
  if (k >= order.cone_count()) throw UsageError("cone index out of range");
  const ConeData df = order.cone_data(f, k);
  const ConeData dg = order.cone_data(g, k);
  // v ∈ lm_k(f)T_k(f) means the multiplier v − lm_k(f) is in T_k(f).
  if (!order.in_cone_target(k, order.shifted_lm(f, v - df.lm)) || !order.in_cone_target(k, order.shifted_lm(g, v - dg.lm)))
    throw UsageError("collision monomial " + v.str() + " is not in both shifted modules for cone " + order.cone_label(k));
  LaurentPoly s = spair_formula(df, dg, f, g, v);
  check_spair_bound(order, s, df, dg, v);
  return s;
}

GBResult buchberger(const TermOrder& order, std::span<const LaurentPoly> generators, const GBConfig& config) {
  if (generators.empty()) throw UsageError("no generators given");
  if (config.max_basis == 0) throw UsageError("basis size guard must be positive");
  Workspace ws{order, {}, {}, {}};
  std::vector<std::vector<LaurentPoly>> prov;
  const FieldSpec& field = generators.front().field();
  const std::size_t n = generators.front().nvars();

  std::vector<LaurentPoly> inputs;
  for (const auto& g : generators) {
    if (g.is_zero()) throw UsageError("zero generator");
    if (&g.field() != &field || g.nvars() != n) throw UsageError("generators live in different rings");
    bool duplicate = false;
    for (const auto& h : inputs) duplicate = duplicate || h == g;
    if (!duplicate) inputs.push_back(order.truncate(g));
  }
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    if (inputs[j].is_zero()) throw UsageError("generator vanishes at the working precision");
    ws.push(inputs[j]);
    if (config.track_provenance) {
      std::vector<LaurentPoly> row(inputs.size(), LaurentPoly(field, n));
      row[j] = LaurentPoly::constant(field, n, 1);
      prov.push_back(std::move(row));
    }
  }

  GBResult result;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t b = 0; b < ws.basis.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) queue.emplace_back(a, b);

  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    ++result.stats.pairs;
    for (std::size_t k = 0; k < order.cone_count(); ++k) {
      // Copies: ws.data may grow while we iterate.
      const ConeData da = ws.data[a][k];
      const ConeData db = ws.data[b][k];
      for (const auto& v : order.collisions(da, db, k)) {
        LaurentPoly s = spair_formula(da, db, ws.basis[a], ws.basis[b], v);
        check_spair_bound(order, s, da, db, v);
        ++result.stats.spairs;
        DivisionResult div = reduce(order, s, ws.basis, ws.cache);
        if (div.remainder.is_zero()) {
          ++result.stats.zero_reductions;
          continue;
        }
        if (ws.basis.size() >= config.max_basis)
          throw ResourceError("basis exceeded " + std::to_string(config.max_basis) + " elements");
        if (config.track_provenance) {
          std::vector<LaurentPoly> row(inputs.size(), LaurentPoly(field, n));
          for (std::size_t j = 0; j < inputs.size(); ++j) {
            row[j] = prov[a][j].mul_term(db.lc, v - da.lm) - prov[b][j].mul_term(da.lc, v - db.lm);
            for (std::size_t h = 0; h < div.quotients.size(); ++h)
              if (!div.quotients[h].is_zero()) row[j] -= div.quotients[h] * prov[h][j];
          }
          prov.push_back(std::move(row));
        }
        ws.push(std::move(div.remainder));
        const std::size_t fresh = ws.basis.size() - 1;
        for (std::size_t h = 0; h < fresh; ++h) queue.emplace_back(h, fresh);
      }
    }
  }

  if (config.track_provenance) {
    for (std::size_t h = 0; h < ws.basis.size(); ++h) {
      LaurentPoly combo(field, n);
      for (std::size_t j = 0; j < inputs.size(); ++j) combo += prov[h][j] * inputs[j];
      if (!order.truncate(combo - ws.basis[h]).is_zero())
        throw std::logic_error("recorded combination does not reproduce basis element " + std::to_string(h));
    }
    result.provenance = std::move(prov);
  }
  result.basis = std::move(ws.basis);
  if (config.normalize) {
    for (std::size_t h = 0; h < result.basis.size(); ++h) {
      const Coefficient inv = order.leading(result.basis[h]).lc.inverse();
      result.basis[h] = result.basis[h] * inv;
      if (config.track_provenance)
        for (auto& c : result.provenance[h]) c = c * inv;
    }
  }
  return result;
}

GroebnerCertificate is_groebner(const TermOrder& order, std::span<const LaurentPoly> basis) {
  GroebnerCertificate cert;
  Workspace ws{order, {}, {}, {}};
  for (const auto& h : basis) {
    if (h.is_zero()) throw UsageError("zero element in basis");
    ws.push(h);
  }
  for (std::size_t b = 0; b < ws.basis.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      for (std::size_t k = 0; k < order.cone_count(); ++k)
        for (const auto& v : order.collisions(ws.data[a][k], ws.data[b][k], k)) {
          LaurentPoly s = spair_formula(ws.data[a][k], ws.data[b][k], ws.basis[a], ws.basis[b], v);
          ++cert.spairs_checked;
          DivisionResult div = reduce(order, s, ws.basis, ws.cache);
          if (!div.remainder.is_zero()) {
            cert.is_groebner = false;
            cert.failure = CriterionFailure{k, a, b, v, std::move(div.remainder)};
            return cert;
          }
        }
  return cert;
}

bool ideal_membership(const TermOrder& order, const LaurentPoly& f, std::span<const LaurentPoly> basis, bool strict) {
  if (strict && !is_groebner(order, basis).is_groebner) throw UsageError("membership test needs a Gröbner basis");
  return reduce(order, f, basis).remainder.is_zero();
}

}  // namespace lgb
