#include "nbj/certificate.hpp"

#include <stdexcept>

namespace nbj {

void SchemeParams::validate() const {
  if (r < 3) throw std::invalid_argument("scheme parameters: r >= 3 required");
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("scheme parameters: 0 <= k <= n required");
  }
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

void Certificate::absorb(const Certificate& other) {
  for (const auto& w : other.witnesses) {
    Witness copy = w;
    if (copy.note.empty()) copy.note = other.check;
    fail(std::move(copy));
  }
  witness_total += other.witness_total - other.witnesses.size();
  if (other.verdict == Verdict::fail) verdict = Verdict::fail;
  for (const auto& n : other.notes) notes.push_back(other.check + ": " + n);
}

}  // namespace nbj
