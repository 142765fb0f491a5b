#include "jq/vclock.hpp"

namespace jq {

VirtualTime VirtualClock::advance(SimTime now) {
  if (now < _last_real)
    throw SimError(Errc::TimeRegression, "advance to " + std::to_string(now) +
                                             " before " + std::to_string(_last_real));
  if (_active_weight > 0.0)
    _last_virtual += _capacity * (now - _last_real) / _active_weight;
  _last_real = now;
  return _last_virtual;
}

void VirtualClock::set_active_weight(SimTime now, double weight_sum) {
  advance(now);
  _active_weight = weight_sum;
}

}  // namespace jq
