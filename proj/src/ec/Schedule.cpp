#include "eqc/ec/Schedule.hpp"

#include <algorithm>

namespace eqc::ec {

Schedule scheduleNaive(std::size_t m, std::size_t m2) {
  Schedule s;
  s.reserve(m + m2);
  const std::size_t common = std::min(m, m2);
  for (std::size_t i = 0; i < common; ++i) {
    s.push_back(Side::G);
    s.push_back(Side::GPrime);
  }
  s.insert(s.end(), m - common, Side::G);
  s.insert(s.end(), m2 - common, Side::GPrime);
  return s;
}

Schedule scheduleProportional(std::size_t m, std::size_t m2) {
  Schedule s;
  s.reserve(m + m2);
  if (m == 0 || m2 == 0) {
    s.insert(s.end(), m, Side::G);
    s.insert(s.end(), m2, Side::GPrime);
    return s;
  }
  if (m <= m2) {
    for (std::size_t j = 0; j < m; ++j) {
      s.push_back(Side::G);
      const std::size_t burst = (j + 1) * m2 / m - j * m2 / m;
      s.insert(s.end(), burst, Side::GPrime);
    }
  } else {
    for (std::size_t j = 0; j < m2; ++j) {
      const std::size_t burst = (j + 1) * m / m2 - j * m / m2;
      s.insert(s.end(), burst, Side::G);
      s.push_back(Side::GPrime);
    }
  }
  return s;
}

Schedule scheduleSequential(std::size_t m, std::size_t m2) {
  Schedule s(m, Side::G);
  s.insert(s.end(), m2, Side::GPrime);
  return s;
}

bool isComplete(const Schedule& s, std::size_t m, std::size_t m2) {
  const auto g = static_cast<std::size_t>(std::count(s.begin(), s.end(), Side::G));
  return g == m && s.size() - g == m2;
}

} // namespace eqc::ec
