#include "nshift/endo.hpp"

#include "nshift/errors.hpp"

namespace nshift {

namespace {

bool is_power_of(BigInt e, std::uint64_t p) {
  if (e < 1) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}

// Representative of e mod (q - 1) in [1, q - 1]; x^e is then unchanged on
// every field element (0 stays 0, units have order dividing q - 1).
BigInt reduce_exponent(const BigInt& e, FieldRef field) {
  const BigInt m = field->order() - 1;
  BigInt r = e % m;
  return r == 0 ? m : r;
}

}  // namespace

Endomorphism::Endomorphism(Kind kind, PlatformRef platform, BigInt e, std::optional<PlatformElement> H,
                           std::optional<PlatformElement> H_inv)
    : kind_(kind), platform_(std::move(platform)), e_(std::move(e)), H_(std::move(H)), H_inv_(std::move(H_inv)) {}

Endomorphism Endomorphism::identity(PlatformRef platform) {
  return Endomorphism(Kind::Identity, std::move(platform), 1, std::nullopt, std::nullopt);
}

Endomorphism Endomorphism::inner(PlatformElement H, PlatformElement H_inv) {
  if (!(*H.spec() == *H_inv.spec())) throw SpecMismatch("H and H_inv on different platforms");
  if (!(H * H_inv).is_identity()) throw ValidationError("H * H_inv is not the identity");
  PlatformRef platform = H.spec();
  return Endomorphism(Kind::Inner, std::move(platform), 1, std::move(H), std::move(H_inv));
}

Endomorphism Endomorphism::entry_power(PlatformRef platform, const BigInt& e) {
  if (!platform->over_field()) throw PreconditionError("entry-power maps need a field platform");
  if (!is_power_of(e, platform->field()->characteristic()))
    throw ValidationError("entry-power exponent must be a power of the characteristic");
  BigInt r = reduce_exponent(e, platform->field());
  return Endomorphism(Kind::EntryPower, std::move(platform), std::move(r), std::nullopt, std::nullopt);
}

Endomorphism Endomorphism::compose(const BigInt& e, PlatformElement H, PlatformElement H_inv) {
  Endomorphism pw = entry_power(H.spec(), e);
  Endomorphism conj = inner(std::move(H), std::move(H_inv));
  return Endomorphism(Kind::Compose, conj.platform_, pw.e_, conj.H_, conj.H_inv_);
}

const PlatformElement& Endomorphism::H() const {
  if (!H_) throw PreconditionError("endomorphism has no conjugating matrix");
  return *H_;
}

const PlatformElement& Endomorphism::H_inv() const {
  if (!H_inv_) throw PreconditionError("endomorphism has no conjugating matrix");
  return *H_inv_;
}

PlatformElement Endomorphism::apply(const PlatformElement& x) const {
  if (!(*x.spec() == *platform_)) throw SpecMismatch("endomorphism applied on a different platform");
  PlatformElement y = has_power() && e_ != 1 ? x.entry_pow(e_) : x;
  if (has_conjugation()) y = *H_inv_ * y * *H_;
  return y;
}

Endomorphism Endomorphism::then(const Endomorphism& next) const {
  if (!(*platform_ == *next.platform_)) throw SpecMismatch("composing endomorphisms of different platforms");
  if (kind_ == Kind::Identity) return next;
  if (next.kind_ == Kind::Identity) return *this;

  // (e1, H1) then (e2, H2) = (e1 e2, psi_e2(H1) H2)
  const bool power = has_power() || next.has_power();
  const bool conj = has_conjugation() || next.has_conjugation();
  BigInt e = power ? reduce_exponent(e_ * next.e_, platform_->field()) : BigInt(1);

  std::optional<PlatformElement> H, H_inv;
  if (conj) {
    auto twist = [&](const PlatformElement& m) { return next.has_power() && next.e_ != 1 ? m.entry_pow(next.e_) : m; };
    if (H_ && next.H_) {
      H = twist(*H_) * *next.H_;
      H_inv = *next.H_inv_ * twist(*H_inv_);
    } else if (H_) {
      H = twist(*H_);
      H_inv = twist(*H_inv_);
    } else {
      H = next.H_;
      H_inv = next.H_inv_;
    }
  }
  Kind kind = power ? (conj ? Kind::Compose : Kind::EntryPower) : Kind::Inner;
  return Endomorphism(kind, platform_, std::move(e), std::move(H), std::move(H_inv));
}

Endomorphism Endomorphism::power(const BigInt& k) const {
  if (k < 0) throw ValidationError("negative endomorphism power");
  Endomorphism result = identity(platform_);
  if (k == 0 || kind_ == Kind::Identity) return result;
  const auto top = boost::multiprecision::msb(k);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = result.then(result);
    if (boost::multiprecision::bit_test(k, i)) result = result.then(*this);
  }
  return result;
}

FieldRef Endomorphism::scalar_field() const {
  FieldRef f = platform_->field();
  return has_power() ? f->prime_subfield() : f;
}

}  // namespace nshift
