#ifndef JQ_VCLOCK_HPP
#define JQ_VCLOCK_HPP

#include "jq/model.hpp"

namespace jq {

// Piecewise-linear virtual time: dV/dt = capacity / active_weight while any
// flow is backlogged, frozen while the system is idle. V never decreases and
// is never reset, so stored per-flow finish stamps stay comparable across
// idle periods.
class VirtualClock {
public:
  explicit VirtualClock(double capacity_Bps) : _capacity(capacity_Bps) {}

  // Moves the clock to `now` and returns V(now). Throws TimeRegression when
  // now < the last observed real time.
  VirtualTime advance(SimTime now);

  // Advances V to `now` under the old weight sum, then installs the new one.
  // Subsequent advances use the new slope.
  void set_active_weight(SimTime now, double weight_sum);

  VirtualTime now_virtual() const { return _last_virtual; }
  SimTime last_real() const { return _last_real; }
  double active_weight() const { return _active_weight; }

private:
  double _capacity;
  SimTime _last_real = 0.0;
  VirtualTime _last_virtual = 0.0;
  double _active_weight = 0.0;
};

}  // namespace jq

#endif
