#include "jq/policy.hpp"

#include <cmath>

namespace jq {

LevelTable::LevelTable()
    : LevelTable({{TosClass::Voice, 1.0},
                  {TosClass::Video, 2.0},
                  {TosClass::Interactive, 3.0},
                  {TosClass::Bulk, 4.0}},
                 4.0, 1.0) {}

LevelTable::LevelTable(std::map<TosClass, double> levels, double default_level, double fl_scale)
    : _levels(std::move(levels)), _default_level(default_level), _fl_scale(fl_scale) {
  for (const auto& [c, lv] : _levels)
    if (lv < 0.0 || !std::isfinite(lv))
      throw SimError(Errc::InvalidSpec, std::string("level for ") + to_string(c) + " must be >= 0");
  if (_default_level < 0.0 || _fl_scale < 0.0)
    throw SimError(Errc::InvalidSpec, "default_level and fl_scale must be >= 0");
  if (level(TosClass::Voice) > level(TosClass::Bulk))
    throw SimError(Errc::InvalidSpec, "voice level must not exceed bulk level");
}

double LevelTable::level(TosClass c) const {
  auto it = _levels.find(c);
  return it == _levels.end() ? _default_level : it->second;
}

double LevelTable::flow_level(TosClass c) const { return _fl_scale * level(c); }

bool congestion_rule(const DetectorConfig& cfg, double capacity_Bps,
                     uint64_t window_arrived_bytes, uint64_t backlog_packets) {
  double rate = static_cast<double>(window_arrived_bytes) / cfg.window_sec;
  if (rate > cfg.rate_threshold_fraction * capacity_Bps) return true;
  return backlog_packets > cfg.backlog_threshold_packets;
}

void CongestionDetector::evict(SimTime now) {
  while (!_arrivals.empty() && _arrivals.front().first <= now - _cfg.window_sec) {
    _window_bytes -= _arrivals.front().second;
    _arrivals.pop_front();
  }
}

void CongestionDetector::record_arrival(SimTime now, uint32_t bytes) {
  evict(now);
  _arrivals.emplace_back(now, bytes);
  _window_bytes += bytes;
}

bool CongestionDetector::evaluate(SimTime now, uint64_t backlog_packets) {
  if (_congested && now < _hold_until) return true;
  evict(now);
  bool raw = congestion_rule(_cfg, _capacity, _window_bytes, backlog_packets);
  if (raw && !_congested) _hold_until = now + _cfg.window_sec;
  _congested = raw;
  return _congested;
}

void UserScores::observe_arrival(int user_id, SimTime now, uint32_t bytes) {
  Score& s = _users[user_id];
  if (s.rate > 0.0) s.rate *= std::exp(-(now - s.last) / _cfg.tau_sec);
  s.rate += static_cast<double>(bytes) / _cfg.tau_sec;
  s.last = now;
}

double UserScores::ewma_rate(int user_id, SimTime now) const {
  auto it = _users.find(user_id);
  if (it == _users.end()) return 0.0;
  return it->second.rate * std::exp(-(now - it->second.last) / _cfg.tau_sec);
}

double UserScores::fair_share() const {
  return _users.empty() ? _capacity : _capacity / static_cast<double>(_users.size());
}

double UserScores::user_level(int user_id, SimTime now) const {
  double excess = ewma_rate(user_id, now) - fair_share();
  return _cfg.usr_scale * std::max(0.0, excess);
}

ChargeInputs Policy::on_arrival(const Packet& pkt, SimTime now, uint64_t backlog_packets) {
  _scores.observe_arrival(pkt.user_id, now, pkt.length_bytes);
  _detector.record_arrival(now, pkt.length_bytes);
  if (!_detector.evaluate(now, backlog_packets)) return ChargeInputs{};
  ChargeInputs c;
  c.congested = true;
  c.flow_level = _levels.flow_level(pkt.tos);
  c.user_level = _scores.user_level(pkt.user_id, now);
  return c;
}

}  // namespace jq
