#pragma once

namespace nbj {

/// Parameters (r, k, n) of the scheme on weight-k words of length n over an
/// alphabet of size r.  Requires r >= 3 and 0 <= k <= n.
struct SchemeParams {
  int r = 3;
  int k = 0;
  int n = 0;

  /// Throws std::invalid_argument when the constraints are violated.
  void validate() const;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

}  // namespace nbj
