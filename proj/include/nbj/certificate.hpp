#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nbj/params.hpp"

namespace nbj {

/// Structured failure record: an index tuple locating the violation plus the
/// expected/actual exact values as strings.
struct Witness {
  std::vector<long long> index;
  std::string expected;
  std::string actual;
  std::string note;
};

enum class Verdict { pass, fail, skipped };

std::string verdict_name(Verdict v);

/// Machine-readable verdict record for one verification pass.  A "fail"
/// verdict carries at least one witness; a "pass" verdict carries none.
struct Certificate {
  static constexpr std::size_t kMaxStoredWitnesses = 12;

  std::string check;
  SchemeParams instance;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  std::size_t witness_total = 0;  // includes witnesses dropped by the cap
  std::vector<std::string> notes;
  std::int64_t wall_time_ms = 0;

  explicit Certificate(std::string name, SchemeParams params = {})
      : check(std::move(name)), instance(params) {}

  bool passed() const { return verdict == Verdict::pass; }

  void fail(Witness w) {
    verdict = Verdict::fail;
    ++witness_total;
    if (witnesses.size() < kMaxStoredWitnesses) witnesses.push_back(std::move(w));
  }

  void fail(std::vector<long long> index, std::string expected, std::string actual,
            std::string note = {}) {
    fail(Witness{std::move(index), std::move(expected), std::move(actual), std::move(note)});
  }

  void add_note(std::string note) { notes.push_back(std::move(note)); }

  /// Folds another certificate's outcome into this one (used by composite
  /// checks that aggregate several passes).
  void absorb(const Certificate& other);
};

}  // namespace nbj
