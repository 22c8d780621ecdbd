#include <coverkit/base.hpp>

namespace coverkit {

std::uint64_t to_u64_capped(const Integer& value, std::uint64_t cap,
                            const std::string& what) {
  if (sgn(value) < 0) throw std::invalid_argument(what + " is negative");
  if (!value.fits_ulong_p() || value.get_ui() > cap) {
    throw CapExceeded(what + " " + value.get_str() + " exceeds cap " +
                      std::to_string(cap));
  }
  return value.get_ui();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

}  // namespace coverkit
