#pragma once

#include <string>
#include <vector>

#include "mackey/cartan.hpp"

namespace mackey {

// Human-readable report.  Rationals appear as "num/den", integers without
// the "/1".  Pair rows keep the canonical enumeration order.
std::string render_text(const CartanReport& report);

// Machine-readable report with a stable key order.  Rational values are
// {"num": "...", "den": "..."} with decimal strings, so arbitrary precision
// survives the trip.  Ends with a newline.
std::string render_json(const CartanReport& report);

// Several reports as one JSON array, same per-report schema.
std::string render_json(const std::vector<CartanReport>& reports);

// One "PASS/FAIL  check  [subject]" line per verification record; empty
// string when the report carries no verification.
std::string render_verification_lines(const CartanReport& report);

} // namespace mackey
