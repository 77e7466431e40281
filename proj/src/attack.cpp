#include "nshift/attack.hpp"

#include <chrono>
#include <deque>

#include "nshift/errors.hpp"

namespace nshift {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

AttackReport failure(Method method, std::string note, Clock::time_point start) {
  AttackReport r;
  r.method = method;
  r.note = std::move(note);
  r.elapsed_ms = ms_since(start);
  return r;
}

// powers[i] = x^i for i = 0..count-1
std::vector<PlatformElement> power_table(const PlatformElement& x, std::size_t count) {
  std::vector<PlatformElement> out;
  out.reserve(count);
  out.push_back(PlatformElement::identity(x.spec()));
  for (std::size_t i = 1; i < count; ++i) out.push_back(out.back() * x);
  return out;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::General: return "general";
    case Method::Conjugation: return "conjugation";
    case Method::Masked: return "masked";
    case Method::Commutant: return "commutant";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "general") return Method::General;
  if (name == "conjugation") return Method::Conjugation;
  if (name == "masked") return Method::Masked;
  if (name == "commutant") return Method::Commutant;
  throw ValidationError("unknown attack method '" + name + "'");
}

// ---------------------------------------------------------------------------

OrbitBasis orbit_prefix_basis(const PlatformElement& g, const Endomorphism& phi, std::size_t max_dim) {
  FieldRef scalar = phi.scalar_field();
  const std::size_t dim = g.spec()->flat_dim(scalar);
  OrbitBasis ob{SpanBasis<std::size_t>(scalar, dim), {}, 0};
  PlatformElement a = g;
  for (std::size_t i = 1;; ++i) {
    const Vector v = flatten(a, scalar);
    if (ob.originals.size() == max_dim) {
      if (!ob.basis.contains(v))
        throw InvariantViolation("orbit prefix exceeded max_dim without becoming dependent");
      break;
    }
    if (!ob.basis.insert(v, i).added) break;
    ob.originals.push_back(a);
    a = phi.apply(a) * g;
  }
  ob.k = ob.originals.size();
  return ob;
}

OrbitBasis orbit_prefix_basis(const PlatformElement& g, const Endomorphism& phi) {
  return orbit_prefix_basis(g, phi, g.spec()->flat_dim(phi.scalar_field()));
}

AttackReport attack_general(const Transcript& t) {
  const auto start = Clock::now();
  if (t.masked) return failure(Method::General, "general attack needs an unmasked transcript", start);

  AttackReport rep;
  rep.method = Method::General;
  FieldRef scalar = t.phi.scalar_field();

  auto phase = Clock::now();
  OrbitBasis ob = orbit_prefix_basis(t.g, t.phi);
  rep.phases.offline_ms = ms_since(phase);
  rep.basis_dim = ob.k;

  phase = Clock::now();
  auto eta = ob.basis.express(flatten(t.bob, scalar));
  rep.phases.express_ms = ms_since(phase);
  if (!eta) {
    rep.note = "invariant violation: published value outside the orbit span";
    rep.elapsed_ms = ms_since(start);
    return rep;
  }

  // K = sum_i eta_i phi^i(a_m) a_i
  phase = Clock::now();
  PlatformElement key = PlatformElement::zero(t.platform);
  PlatformElement shifted = t.alice;
  for (std::size_t i = 0; i < ob.k; ++i) {
    shifted = t.phi.apply(shifted);
    if (!(*eta)[i].is_zero()) key += (shifted * ob.originals[i]).scaled((*eta)[i]);
  }
  rep.phases.assemble_ms = ms_since(phase);

  rep.key = std::move(key);
  rep.success = true;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------

MonomialBasis monomial_closure(const PlatformElement& H, const PlatformElement& H_inv, const PlatformElement& M,
                               ClosureMode mode) {
  if (!(H * H_inv).is_identity()) throw SingularMatrix("H_inv is not the inverse of H");
  FieldRef f = H.spec()->field();
  const PlatformElement hm = H * M;
  MonomialBasis mb{SpanBasis<BasisTag>(f, H.spec()->coeff_count()), {}, 0, 0};

  struct Item {
    std::size_t k, l;
    PlatformElement e;
  };
  std::deque<Item> queue;
  auto offer = [&](std::size_t k, std::size_t l, PlatformElement e) {
    if (mb.basis.insert(flatten(e, f), BasisTag{BasisTag::Part::W, k, l}).added) {
      mb.elements.push_back(e);
      queue.push_back({k, l, std::move(e)});
    }
  };

  if (mode == ClosureMode::Full)
    offer(0, 0, PlatformElement::identity(H.spec()));
  else
    offer(1, 1, H_inv * hm);

  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    if (mode == ClosureMode::Full) {
      offer(it.k + 1, it.l, H_inv * it.e);
      offer(it.k, it.l + 1, it.e * hm);
    } else {
      offer(it.k + 1, it.l + 1, H_inv * it.e * hm);
    }
  }
  mb.w_count = mb.basis.size();
  return mb;
}

MonomialBasis monomial_closure(const PlatformElement& H, const PlatformElement& M, ClosureMode mode) {
  return monomial_closure(H, mat_inverse(H), M, mode);
}

MonomialBasis masked_basis(const PlatformElement& H, const PlatformElement& H_inv, const PlatformElement& M) {
  MonomialBasis mb = monomial_closure(H, H_inv, M, ClosureMode::Diagonal);
  FieldRef f = H.spec()->field();
  const auto ann = left_annihilator(H * M);
  for (std::size_t j = 0; j < ann.size(); ++j) {
    if (mb.basis.insert(flatten(ann[j], f), BasisTag{BasisTag::Part::U, j, 0}).added) {
      mb.elements.push_back(ann[j]);
      ++mb.u_count;
    }
  }
  return mb;
}

namespace {

// sum over W-part basis elements of eta_i H^{-k_i} x (HM)^{l_i}
PlatformElement assemble_monomial_key(const MonomialBasis& mb, const Vector& eta, const PlatformElement& H_inv,
                                      const PlatformElement& hm, const PlatformElement& x) {
  std::size_t max_k = 0, max_l = 0;
  for (std::size_t i = 0; i < mb.w_count; ++i) {
    max_k = std::max(max_k, mb.basis.tag(i).k);
    max_l = std::max(max_l, mb.basis.tag(i).l);
  }
  const auto left = power_table(H_inv, max_k + 1);
  const auto right = power_table(hm, max_l + 1);
  PlatformElement key = PlatformElement::zero(x.spec());
  for (std::size_t i = 0; i < mb.w_count; ++i) {
    if (eta[i].is_zero()) continue;
    const BasisTag& tag = mb.basis.tag(i);
    key += (left[tag.k] * x * right[tag.l]).scaled(eta[i]);
  }
  return key;
}

}  // namespace

AttackReport attack_conjugation(const Transcript& t) {
  const auto start = Clock::now();
  if (t.masked) return failure(Method::Conjugation, "conjugation attack needs an unmasked transcript", start);
  if (t.phi.kind() != Endomorphism::Kind::Inner)
    return failure(Method::Conjugation, "conjugation attack needs an inner automorphism", start);

  AttackReport rep;
  rep.method = Method::Conjugation;
  FieldRef f = t.platform->field();
  const PlatformElement& H = t.phi.H();
  const PlatformElement& H_inv = t.phi.H_inv();

  auto phase = Clock::now();
  MonomialBasis mb = monomial_closure(H, H_inv, t.g, ClosureMode::Full);
  rep.phases.offline_ms = ms_since(phase);
  rep.basis_dim = mb.w_count;

  phase = Clock::now();
  auto eta = mb.basis.express(flatten(t.bob, f));
  rep.phases.express_ms = ms_since(phase);
  if (!eta) {
    rep.note = "invariant violation: published value outside the monomial span";
    rep.elapsed_ms = ms_since(start);
    return rep;
  }

  phase = Clock::now();
  rep.key = assemble_monomial_key(mb, *eta, H_inv, H * t.g, t.alice);
  rep.phases.assemble_ms = ms_since(phase);
  rep.success = true;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

AttackReport attack_masked(const Transcript& t) {
  const auto start = Clock::now();
  if (!t.masked) return failure(Method::Masked, "masked attack needs a masked transcript", start);
  if (t.phi.kind() != Endomorphism::Kind::Inner)
    return failure(Method::Masked, "masked attack needs an inner automorphism", start);
  if (!t.platform->over_field()) return failure(Method::Masked, "masked attack needs a field platform", start);

  AttackReport rep;
  rep.method = Method::Masked;
  FieldRef f = t.platform->field();
  const PlatformElement& H = t.phi.H();
  const PlatformElement& H_inv = t.phi.H_inv();
  const PlatformElement hm = H * t.g;

  auto phase = Clock::now();
  MonomialBasis mb = masked_basis(H, H_inv, t.g);
  rep.phases.offline_ms = ms_since(phase);
  rep.basis_dim = mb.w_count + mb.u_count;

  phase = Clock::now();
  auto coeffs = mb.basis.express(flatten(t.bob, f));
  rep.phases.express_ms = ms_since(phase);
  if (!coeffs) {
    rep.note = "invariant violation: published value outside W + U";
    rep.elapsed_ms = ms_since(start);
    return rep;
  }

  // the part of b_n not explained by W must annihilate HM
  PlatformElement explained = PlatformElement::zero(t.platform);
  for (std::size_t i = 0; i < mb.w_count; ++i)
    if (!(*coeffs)[i].is_zero()) explained += mb.elements[i].scaled((*coeffs)[i]);
  if (!((t.bob - explained) * hm).is_zero()) {
    rep.note = "invariant violation: residual does not annihilate HM";
    rep.elapsed_ms = ms_since(start);
    return rep;
  }

  phase = Clock::now();
  rep.key = assemble_monomial_key(mb, *coeffs, H_inv, hm, t.alice);
  rep.phases.assemble_ms = ms_since(phase);
  rep.success = true;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

// ---------------------------------------------------------------------------

CommutantCandidate commutant_candidate(const PlatformElement& H, const PlatformElement& M,
                                       const PlatformElement& pub_m, const PlatformElement& pub_n,
                                       const CommutantOptions& opts) {
  const PlatformRef& spec = H.spec();
  if (!spec->over_field()) throw PreconditionError("commutant search needs a field platform");
  FieldRef f = spec->field();
  const std::size_t dim = spec->coeff_count();
  const PlatformElement hm = H * M;

  // columns: images of unit matrices under Y -> (Y hm - hm Y, pub_m Y H - H pub_m Y)
  Matrix sys(2 * dim, zero_vector(f, dim));
  for (std::size_t c = 0; c < dim; ++c) {
    PlatformElement unit = PlatformElement::zero(spec);
    unit.set(c / spec->n(), c % spec->n(), f->one());
    const PlatformElement x = pub_m * unit;
    const PlatformElement first = unit * hm - hm * unit;
    const PlatformElement second = x * H - H * x;
    for (std::size_t r = 0; r < dim; ++r) {
      sys[r][c] = first.coeffs()[r];
      sys[dim + r][c] = second.coeffs()[r];
    }
  }
  auto sol = solve_linear(sys, zero_vector(f, 2 * dim), f, dim);
  const auto& basis = sol->nullspace;
  CommutantCandidate out;
  out.solution_dim = basis.size();
  if (basis.empty()) return out;

  auto attempt = [&](const Vector& y) -> bool {
    PlatformElement yp(spec, y);
    auto inv = try_inverse(yp);
    if (!inv) return false;
    out.key = pub_m * yp * pub_n * *inv;
    return true;
  };
  auto combine = [&](const std::vector<FieldElement>& c) {
    Vector y = zero_vector(f, dim);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (c[b].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) y[j] += c[b] * basis[b][j];
    }
    return y;
  };

  for (const auto& b : basis)
    if (attempt(b)) return out;

  const BigInt space = boost::multiprecision::pow(f->order(), static_cast<unsigned>(basis.size()));
  if (space <= opts.enumeration_limit) {
    const auto q = static_cast<std::uint64_t>(f->order());
    const auto total = static_cast<std::uint64_t>(space);
    std::vector<FieldElement> c(basis.size(), f->zero());
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t rest = code;
      for (auto& x : c) {
        x = f->from_index(rest % q);
        rest /= q;
      }
      if (attempt(combine(c))) return out;
    }
    return out;
  }
  Rng rng(opts.seed);
  std::vector<FieldElement> c(basis.size(), f->zero());
  for (std::size_t trial = 0; trial < opts.random_trials; ++trial) {
    for (auto& x : c) x = random_field_element(f, rng);
    if (attempt(combine(c))) return out;
  }
  return out;
}

AttackReport attack_commutant(const Transcript& t, const CommutantOptions& opts) {
  const auto start = Clock::now();
  if (t.masked)
    return failure(Method::Commutant, "commutant attack does not apply to masked transcripts", start);
  if (t.phi.kind() != Endomorphism::Kind::Inner)
    return failure(Method::Commutant, "commutant attack needs an inner automorphism", start);
  if (!t.platform->over_field()) return failure(Method::Commutant, "commutant attack needs a field platform", start);

  AttackReport rep;
  rep.method = Method::Commutant;
  auto phase = Clock::now();
  CommutantCandidate cand = commutant_candidate(t.phi.H(), t.g, t.alice, t.bob, opts);
  rep.phases.assemble_ms = ms_since(phase);
  rep.basis_dim = cand.solution_dim;
  if (cand.key) {
    rep.key = std::move(cand.key);
    rep.success = true;
  } else {
    rep.note = "no invertible solution found within the trial budget";
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

AttackReport run_attack(Method method, const Transcript& t) {
  switch (method) {
    case Method::General: return attack_general(t);
    case Method::Conjugation: return attack_conjugation(t);
    case Method::Masked: return attack_masked(t);
    case Method::Commutant: return attack_commutant(t);
  }
  throw ValidationError("unknown attack method");
}

}  // namespace nshift
