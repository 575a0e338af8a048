#include "nielsen/ext_nat.hpp"

#include <stdexcept>

#include "nielsen/errors.hpp"

namespace nielsen {

ExtNat::ExtNat(long v) : value_(v) {
  if (v < 0) throw InputError("cardinality must be non-negative");
}

ExtNat ExtNat::finite(BigInt v) {
  if (v < 0) throw InputError("cardinality must be non-negative, got " + v.get_str());
  ExtNat r;
  r.value_ = std::move(v);
  return r;
}

ExtNat ExtNat::infinite() {
  ExtNat r;
  r.infinite_ = true;
  return r;
}

const BigInt& ExtNat::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite cardinality");
  return value_;
}

std::string ExtNat::to_string() const { return infinite_ ? "infinite" : value_.get_str(); }

bool operator==(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace nielsen
