#include "pythia/verifier.hpp"

#include <algorithm>

#include "pythia/boxes.hpp"
#include "pythia/core_arith.hpp"
#include "pythia/parallel.hpp"
#include "pythia/triples.hpp"

namespace pythia {

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::Result1: return "result1";
        case Claim::Result2: return "result2";
        case Claim::Result3: return "result3";
        case Claim::Prop1: return "prop1";
        case Claim::Prop2: return "prop2";
        case Claim::Theorem1: return "theorem1";
        case Claim::Theorem2: return "theorem2";
        case Claim::NoTriples: return "no-triples";
    }
    throw domain_error("claim_name: unknown claim");
}

Claim claim_from_name(const std::string& s) {
    if (s == "result1") return Claim::Result1;
    if (s == "result2") return Claim::Result2;
    if (s == "result3") return Claim::Result3;
    if (s == "prop1") return Claim::Prop1;
    if (s == "prop2") return Claim::Prop2;
    if (s == "theorem1") return Claim::Theorem1;
    if (s == "theorem2") return Claim::Theorem2;
    if (s == "no-triples") return Claim::NoTriples;
    throw domain_error("unknown claim: " + s);
}

bool claim_violated(Claim c, std::span<const u64> t) {
    auto sq = [](u64 v) { return u128{v} * v; };
    switch (c) {
        case Claim::Result1: {
            // (a, b): a^2 divides b^2 but a does not divide b.
            if (t.size() != 2 || t[0] == 0 || t[1] == 0) return false;
            return sq(t[1]) % sq(t[0]) == 0 && t[1] % t[0] != 0;
        }
        case Claim::Result2: {
            // (a, b): coprime, ab square, but a or b not a square.
            if (t.size() != 2 || t[0] == 0 || t[1] == 0) return false;
            if (gcd(t[0], t[1]) != 1) return false;
            if (!is_perfect_square_u128(u128{t[0]} * t[1])) return false;
            return !is_perfect_square(t[0]) || !is_perfect_square(t[1]);
        }
        case Claim::Result3: {
            // (m, n): both m^2 + n^2 and m^2 - n^2 are squares.
            if (t.size() != 2 || t[1] == 0 || t[0] <= t[1]) return false;
            return is_perfect_square_u128(sq(t[0]) + sq(t[1])) &&
                   is_perfect_square_u128(sq(t[0]) - sq(t[1]));
        }
        case Claim::Prop1: {
            // (x, y, z): z^2 = x^4 + 4y^4.
            if (t.size() != 3 || t[0] == 0 || t[1] == 0 || t[2] == 0)
                return false;
            return sq(t[2]) == sq(t[0]) * sq(t[0]) + 4 * sq(t[1]) * sq(t[1]);
        }
        case Claim::Prop2: {
            // (x, y, z, w): z^2 = w^2 + y^2 and w^2 = y^2 + x^2.
            if (t.size() != 4) return false;
            for (u64 v : t)
                if (v == 0) return false;
            return sq(t[2]) == sq(t[3]) + sq(t[1]) &&
                   sq(t[3]) == sq(t[1]) + sq(t[0]);
        }
        case Claim::Theorem1: {
            // (a, d, b, c): c^2 = a^2 + b^2 and b^2 = a^2 + d^2.
            if (t.size() != 4) return false;
            for (u64 v : t)
                if (v == 0) return false;
            return sq(t[3]) == sq(t[0]) + sq(t[2]) &&
                   sq(t[2]) == sq(t[0]) + sq(t[1]);
        }
        case Claim::Theorem2: {
            // (r, p, q, d): q^2 = 2r^2 + p^2 and d^2 = r^2 + p^2.
            if (t.size() != 4) return false;
            for (u64 v : t)
                if (v == 0) return false;
            return sq(t[2]) == 2 * sq(t[0]) + sq(t[1]) &&
                   sq(t[3]) == sq(t[0]) + sq(t[1]);
        }
        case Claim::NoTriples: {
            // (a, b, c): any Pythagorean triple refutes the claim.
            if (t.size() != 3 || t[0] == 0 || t[1] == 0 || t[2] == 0)
                return false;
            return t[0] <= t[1] && sq(t[0]) + sq(t[1]) == sq(t[2]);
        }
    }
    return false;
}

void SearchReport::add_counterexample(std::vector<u64> tuple) {
    if (!claim_violated(claim, tuple))
        throw domain_error(
            "SearchReport: tuple does not violate claim " + claim_name(claim));
    counterexamples.push_back(std::move(tuple));
}

namespace {

struct Partial {
    u64 examined = 0;
    std::vector<std::vector<u64>> cex;
};

class Timer {
  public:
    explicit Timer(SearchReport& r) : report_(r), start_(clock::now()) {}
    ~Timer() {
        report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            clock::now() - start_);
    }

  private:
    using clock = std::chrono::steady_clock;
    SearchReport& report_;
    clock::time_point start_;
};

void merge(SearchReport& report, std::vector<Partial> parts) {
    for (auto& p : parts) {
        report.examined += p.examined;
        for (auto& t : p.cex) report.add_counterexample(std::move(t));
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
}

}  // namespace

SearchReport verify_prop1(u64 max_xy, unsigned jobs) {
    if (max_xy == 0) throw domain_error("verify_prop1: max_xy must be >= 1");
    if (max_xy >= (u64{1} << 31))
        throw overflow_error("verify_prop1: 5 * max_xy^4 exceeds double width");
    SearchReport report{Claim::Prop1,
                        {{"max_xy", max_xy}},
                        "one (x, y) pair with 1 <= x, y <= max_xy"};
    Timer timer(report);
    merge(report,
          run_partitioned<Partial>(1, max_xy + 1, jobs, [&](u64 lo, u64 hi) {
              Partial part;
              for (u64 x = lo; x < hi; ++x) {
                  const u128 x4 = u128{x} * x * x * x;
                  for (u64 y = 1; y <= max_xy; ++y) {
                      const u128 s = x4 + 4 * (u128{y} * y * y * y);
                      ++part.examined;
                      if (is_perfect_square_u128(s))
                          part.cex.push_back(
                              {x, y, static_cast<u64>(isqrt_u128(s))});
                  }
              }
              return part;
          }));
    return report;
}

SearchReport verify_prop2(u64 max_w, unsigned jobs) {
    if (max_w == 0) throw domain_error("verify_prop2: max_w must be >= 1");
    SearchReport report{
        Claim::Prop2,
        {{"max_w", max_w}},
        "one leg orientation of a Pythagorean triple (x, y, w), w <= max_w"};
    Timer timer(report);
    const auto triples =
        max_w < 5 ? std::vector<Triple>{} : enumerate_triples(max_w, false);
    merge(report, run_partitioned<Partial>(
                      0, triples.size(), jobs, [&](u64 lo, u64 hi) {
                          Partial part;
                          for (u64 i = lo; i < hi; ++i) {
                              const Triple& t = triples[i];
                              const u64 w = t.c;
                              for (auto [x, y] :
                                   {std::pair{t.b, t.a}, std::pair{t.a, t.b}}) {
                                  ++part.examined;
                                  const u128 zz = u128{w} * w + u128{y} * y;
                                  if (is_perfect_square_u128(zz))
                                      part.cex.push_back(
                                          {x, y,
                                           static_cast<u64>(isqrt_u128(zz)), w});
                              }
                          }
                          return part;
                      }));
    return report;
}

SearchReport verify_result3(u64 max_mn, unsigned jobs) {
    if (max_mn < 2) throw domain_error("verify_result3: max_mn must be >= 2");
    SearchReport report{Claim::Result3,
                        {{"max_mn", max_mn}},
                        "one pair (m, n) with 1 <= n < m <= max_mn"};
    Timer timer(report);
    merge(report,
          run_partitioned<Partial>(2, max_mn + 1, jobs, [&](u64 lo, u64 hi) {
              Partial part;
              for (u64 m = lo; m < hi; ++m) {
                  const u128 m2 = u128{m} * m;
                  for (u64 n = 1; n < m; ++n) {
                      ++part.examined;
                      const u128 n2 = u128{n} * n;
                      if (is_perfect_square_u128(m2 + n2) &&
                          is_perfect_square_u128(m2 - n2))
                          part.cex.push_back({m, n});
                  }
              }
              return part;
          }));
    return report;
}

SearchReport verify_theorem1(u64 max_c, unsigned jobs) {
    if (max_c < 5) throw domain_error("verify_theorem1: max_c must be >= 5");
    SearchReport report{Claim::Theorem1,
                        {{"max_c", max_c}},
                        "one Pythagorean triple (a, b, c) with a < b, c <= max_c"};
    Timer timer(report);
    const auto triples = enumerate_triples(max_c, false);
    merge(report, run_partitioned<Partial>(
                      0, triples.size(), jobs, [&](u64 lo, u64 hi) {
                          Partial part;
                          for (u64 i = lo; i < hi; ++i) {
                              const Triple& t = triples[i];
                              ++part.examined;
                              // Seeks a second triangle (a, d, b): d^2 = b^2 - a^2.
                              const u128 dd =
                                  u128{t.b} * t.b - u128{t.a} * t.a;
                              if (dd > 0 && is_perfect_square_u128(dd))
                                  part.cex.push_back(
                                      {t.a, static_cast<u64>(isqrt_u128(dd)),
                                       t.b, t.c});
                          }
                          return part;
                      }));

    // Theorem 1 follows from Proposition 2; the two sweeps must agree at the
    // witness level. A theorem-1 tuple (a, d, b, c) is the prop-2 tuple
    // (d, a, c, b), and within the shared bound both see the same witnesses.
    const SearchReport p2 = verify_prop2(max_c, jobs);
    std::vector<std::vector<u64>> mapped;
    for (const auto& t : p2.counterexamples)
        if (t[2] <= max_c) mapped.push_back({t[1], t[0], t[3], t[2]});
    std::sort(mapped.begin(), mapped.end());
    if (mapped != report.counterexamples)
        throw domain_error(
            "verify_theorem1: witness disagreement with verify_prop2");
    return report;
}

SearchReport verify_theorem2(u64 max_q, unsigned jobs) {
    if (max_q < 3) throw domain_error("verify_theorem2: max_q must be >= 3");
    SearchReport report{Claim::Theorem2,
                        {{"max_q", max_q}},
                        "one equal-edge box (r, r, p, q) with q <= max_q"};
    Timer timer(report);
    const auto boxes = equal_edge_boxes(max_q);
    merge(report,
          run_partitioned<Partial>(0, boxes.size(), jobs, [&](u64 lo, u64 hi) {
              Partial part;
              for (u64 i = lo; i < hi; ++i) {
                  const Box& b = boxes[i];  // (r, r, p, q)
                  ++part.examined;
                  const u128 dd = u128{b.x} * b.x + u128{b.z} * b.z;
                  if (is_perfect_square_u128(dd))
                      part.cex.push_back(
                          {b.x, b.z, b.t, static_cast<u64>(isqrt_u128(dd))});
              }
              return part;
          }));
    return report;
}

SearchReport verify_result1(u64 max_ab, unsigned jobs) {
    if (max_ab == 0) throw domain_error("verify_result1: max_ab must be >= 1");
    SearchReport report{Claim::Result1,
                        {{"max_ab", max_ab}},
                        "one pair (a, b), 1 <= a, b <= max_ab, with a^2 | b^2"};
    Timer timer(report);
    merge(report,
          run_partitioned<Partial>(1, max_ab + 1, jobs, [&](u64 lo, u64 hi) {
              Partial part;
              for (u64 a = lo; a < hi; ++a) {
                  const u128 a2 = u128{a} * a;
                  for (u64 b = 1; b <= max_ab; ++b) {
                      if ((u128{b} * b) % a2 != 0) continue;
                      ++part.examined;
                      if (b % a != 0) part.cex.push_back({a, b});
                  }
              }
              return part;
          }));
    return report;
}

SearchReport verify_result2(u64 max_prod, unsigned jobs) {
    if (max_prod == 0)
        throw domain_error("verify_result2: max_prod must be >= 1");
    SearchReport report{
        Claim::Result2,
        {{"max_prod", max_prod}},
        "one coprime pair (a, b) with ab <= max_prod and ab a perfect square"};
    Timer timer(report);
    merge(report,
          run_partitioned<Partial>(1, max_prod + 1, jobs, [&](u64 lo, u64 hi) {
              Partial part;
              for (u64 a = lo; a < hi; ++a) {
                  for (u64 b = 1; a * b <= max_prod; ++b) {
                      if (gcd(a, b) != 1 || !is_perfect_square(a * b)) continue;
                      ++part.examined;
                      if (!is_perfect_square(a) || !is_perfect_square(b))
                          part.cex.push_back({a, b});
                  }
              }
              return part;
          }));
    return report;
}

SearchReport verify_no_triples(u64 max_c, unsigned jobs) {
    if (max_c == 0)
        throw domain_error("verify_no_triples: max_c must be >= 1");
    SearchReport report{Claim::NoTriples,
                        {{"max_c", max_c}},
                        "one tuple (a, b, c) with a <= b, c <= max_c"};
    Timer timer(report);
    merge(report,
          run_partitioned<Partial>(1, max_c + 1, jobs, [&](u64 lo, u64 hi) {
              Partial part;
              for (u64 c = lo; c < hi; ++c) {
                  for (u64 a = 1; a <= c; ++a) {
                      for (u64 b = a; b <= c; ++b) {
                          ++part.examined;
                          if (a * a + b * b == c * c)
                              part.cex.push_back({a, b, c});
                      }
                  }
              }
              return part;
          }));
    return report;
}

}  // namespace pythia
