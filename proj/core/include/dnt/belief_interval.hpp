#ifndef DNT_BELIEF_INTERVAL_HPP
#define DNT_BELIEF_INTERVAL_HPP

namespace dnt {

/// [lower, upper] support bounds for one subset: lower is a belief value,
/// upper a plausibility value, lower <= upper.
struct BeliefInterval {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
};

}  // namespace dnt

#endif  // DNT_BELIEF_INTERVAL_HPP
