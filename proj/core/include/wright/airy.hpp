#pragma once

namespace wright {

// Ai(x) from the two ascending Maclaurin series, summed in double-double
// until the terms drop below 1e-18.  Validation-grade: |x| <= 8 (beyond
// that the cancellation on the right half-line erodes the series), outside
// throws wright::range_error.
double airy_ai(double x);

}  // namespace wright
