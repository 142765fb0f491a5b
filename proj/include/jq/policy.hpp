#ifndef JQ_POLICY_HPP
#define JQ_POLICY_HPP

#include <deque>
#include <map>

#include "jq/model.hpp"
#include "jq/sched.hpp"

namespace jq {

// Class -> level map. Smaller level means less added delay; voice must never
// be leveled above bulk. fl_le = fl_scale * level.
class LevelTable {
public:
  // Default table: voice 1, video 2, interactive 3, bulk 4.
  LevelTable();
  LevelTable(std::map<TosClass, double> levels, double default_level, double fl_scale);

  double level(TosClass c) const;       // mapped level or default_level
  double flow_level(TosClass c) const;  // fl_scale * level(c)
  double fl_scale() const { return _fl_scale; }
  double default_level() const { return _default_level; }
  const std::map<TosClass, double>& levels() const { return _levels; }

private:
  std::map<TosClass, double> _levels;
  double _default_level = 4.0;
  double _fl_scale = 1.0;
};

struct DetectorConfig {
  double window_sec = 0.1;
  double rate_threshold_fraction = 1.0;  // of link capacity
  uint64_t backlog_threshold_packets = 50;
};

// Pure trigger rule, strict inequalities on both arms.
bool congestion_rule(const DetectorConfig& cfg, double capacity_Bps,
                     uint64_t window_arrived_bytes, uint64_t backlog_packets);

// Windowed arrival counter plus the rule above. Once the flag turns on it
// holds for one full window before the rule is consulted again, so the
// regime cannot flap per packet.
class CongestionDetector {
public:
  CongestionDetector(DetectorConfig cfg, double capacity_Bps)
      : _cfg(cfg), _capacity(capacity_Bps) {}

  void record_arrival(SimTime now, uint32_t bytes);
  bool evaluate(SimTime now, uint64_t backlog_packets);
  uint64_t window_bytes() const { return _window_bytes; }

private:
  void evict(SimTime now);

  DetectorConfig _cfg;
  double _capacity;
  std::deque<std::pair<SimTime, uint32_t>> _arrivals;
  uint64_t _window_bytes = 0;
  bool _congested = false;
  SimTime _hold_until = 0.0;
};

struct UserScoreConfig {
  double tau_sec = 1.0;    // EWMA decay constant
  double usr_scale = 1.0;  // seconds; converts excess rate to bytes
};

// Per-user EWMA arrival rates. A user above the equal share C/N of the
// users seen so far is charged proportionally to the excess.
class UserScores {
public:
  UserScores(UserScoreConfig cfg, double capacity_Bps) : _cfg(cfg), _capacity(capacity_Bps) {}

  void observe_arrival(int user_id, SimTime now, uint32_t bytes);

  // usr_le in bytes: usr_scale * max(0, rate(now) - C / active_users).
  double user_level(int user_id, SimTime now) const;

  double ewma_rate(int user_id, SimTime now) const;
  double fair_share() const;
  size_t active_users() const { return _users.size(); }

private:
  struct Score {
    double rate = 0.0;
    SimTime last = 0.0;
  };
  UserScoreConfig _cfg;
  double _capacity;
  std::map<int, Score> _users;
};

struct PolicyConfig {
  DetectorConfig detector;
  LevelTable levels;
  UserScoreConfig user;
};

// Per-arrival pipeline: score the user, feed the detector, and produce the
// charges the JQ discipline applies. Outside congestion the charges are
// exactly (0, 0, false), which is what makes JQ collapse to WFQ.
class Policy {
public:
  Policy(const PolicyConfig& cfg, double capacity_Bps)
      : _levels(cfg.levels),
        _detector(cfg.detector, capacity_Bps),
        _scores(cfg.user, capacity_Bps) {}

  ChargeInputs on_arrival(const Packet& pkt, SimTime now, uint64_t backlog_packets);

  const UserScores& scores() const { return _scores; }

private:
  LevelTable _levels;
  CongestionDetector _detector;
  UserScores _scores;
};

}  // namespace jq

#endif
