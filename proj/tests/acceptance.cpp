// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ppring/checks.hpp"
#include "ppring/lattice.hpp"

using namespace ppring;

namespace {

const std::vector<std::string> kCorpus = {"C2", "C3", "C4", "C6", "S3", "D8", "Q8", "A4", "D12", "S4"};
const std::vector<int> kPrimes = {2, 3};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string note;

  void take(const CheckResult& r, const std::string& where) {
    cases += r.cases;
    if (r.passed()) return;
    ok = false;
    if (note.empty()) note = where + " " + r.name + (r.failed.empty() ? "" : ": " + r.failed.front());
  }
};

bool report(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o = body();
  const double secs = seconds_since(t0);
  std::printf("criterion %d: %s  %s  (%zu cases, %.2f s)%s%s\n", number, o.ok ? "PASS" : "FAIL", title.c_str(), o.cases,
              secs, o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
  return o.ok;
}

std::string where(const std::string& g, int p) { return g + "/p=" + std::to_string(p); }

}  // namespace

int main() {
  bool all = true;

  all &= report(1, "delta property on the corpus", [] {
    Outcome o;
    for (const auto& name : kCorpus) {
      for (int p : kPrimes) {
        const auto t0 = Clock::now();
        o.take(check_delta(named_group(name), p), where(name, p));
        const double secs = seconds_since(t0);
        if (secs >= 60.0) {
          o.ok = false;
          o.note = where(name, p) + " took " + std::to_string(secs) + " s";
        }
      }
    }
    return o;
  });

  all &= report(2, "partition of unity", [] {
    Outcome o;
    for (const auto& name : kCorpus) {
      for (int p : kPrimes) o.take(check_partition_of_unity(named_group(name), p), where(name, p));
    }
    return o;
  });

  all &= report(3, "closed formula equals the reduction route", [] {
    Outcome o;
    for (const auto& name : kCorpus) {
      for (int p : kPrimes) o.take(check_route_agreement(named_group(name), p), where(name, p));
    }
    return o;
  });

  all &= report(4, "restriction and induction laws on S3, D8, A4", [] {
    Outcome o;
    for (const auto& name : {"S3", "D8", "A4"}) {
      for (int p : kPrimes) {
        const GroupPtr G = named_group(name);
        o.take(check_restriction(G, p), where(name, p));
        o.take(check_induction(G, p), where(name, p));
      }
    }
    return o;
  });

  all &= report(5, "Burnside suite on the corpus", [] {
    Outcome o;
    for (const auto& name : kCorpus) {
      const GroupPtr G = named_group(name);
      o.take(check_marks_delta(G), name);
      o.take(check_gy_idempotent(G), name);
      o.take(check_points_fixes(G), name);
      for (int p : kPrimes) {
        o.take(check_commute_res_ind(G, p), where(name, p));
        o.take(check_commute_brauer(G, p), where(name, p));
      }
    }
    return o;
  });

  all &= report(6, "F_q oracle agreement on C6, S3, D8, A4", [] {
    Outcome o;
    Rng rng(2024);
    const auto t0 = Clock::now();
    for (const auto& name : {"C6", "S3", "D8", "A4"}) {
      for (int p : kPrimes) o.take(check_oracle(named_group(name), p, 10, rng), where(name, p));
    }
    if (o.cases < 50) {
      o.ok = false;
      o.note = "only " + std::to_string(o.cases) + " samples";
    }
    if (seconds_since(t0) >= 120.0) {
      o.ok = false;
      o.note = "over the time budget";
    }
    return o;
  });

  all &= report(7, "species and Brauer morphisms are multiplicative", [] {
    Outcome o;
    Rng rng(7);
    std::size_t species_cases = 0;
    std::size_t brauer_cases = 0;
    for (const auto& name : {"S3", "D8", "A4", "S4", "D12"}) {
      for (int p : kPrimes) {
        const GroupPtr G = named_group(name);
        const CheckResult s = check_species_multiplicative(G, p, 6, rng);
        const CheckResult b = check_brauer_multiplicative(G, p, 3, rng);
        species_cases += s.cases;
        brauer_cases += b.cases;
        o.take(s, where(name, p));
        o.take(b, where(name, p));
      }
    }
    if (species_cases < 50 || brauer_cases < 20) {
      o.ok = false;
      o.note = "too few samples";
    }
    return o;
  });

  all &= report(8, "species factor through Brauer and restriction on S3, D8", [] {
    Outcome o;
    for (const auto& name : {"S3", "D8"}) {
      for (int p : kPrimes) {
        const GroupPtr G = named_group(name);
        o.take(check_factor_tau(G, p), where(name, p));
        o.take(check_tau_res(G, p), where(name, p));
      }
    }
    return o;
  });

  return all ? 0 : 1;
}
