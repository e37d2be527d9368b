#include <stdexcept>

#include "rules.hpp"

namespace bhr::detail {

namespace {

using E = Exponents;

// x = base + step*k for some k >= 0
constexpr bool of_form(int x, int step, int base) { return x >= base && (x - base) % step == 0; }
constexpr bool five(int d, int base) { return of_form(d, 5, base); }

constexpr Answer Y = Answer::yes;
constexpr Answer N = Answer::no;
constexpr Answer O = Answer::open;

// {1^a, 2^b, 3^c} first (d = 0), then d >= 1 split by a, then by b.
constexpr Clause kClauses[] = {
    {"empty list", [](const E& e) { return e.total() == 0; }, Y},

    {"{1^a,2^b,3^c}: a=0, b>=4, c>=3", [](const E& e) { return e.fives == 0 && e.ones == 0 && e.twos >= 4 && e.threes >= 3; }, Y},
    {"{1^a,2^b,3^c}: a=0, b=3, c not in {0, 3k+9}",
     [](const E& e) { return e.fives == 0 && e.ones == 0 && e.twos == 3 && e.threes != 0 && !of_form(e.threes, 3, 9); }, Y},
    {"{1^a,2^b,3^c}: a=0, (b,c) in {(2,2),(2,3),(4,1),(4,2),(7,2),(8,2)}",
     [](const E& e) {
       if (e.fives != 0 || e.ones != 0) return false;
       int b = e.twos, c = e.threes;
       return (b == 2 && (c == 2 || c == 3)) || (b == 4 && (c == 1 || c == 2)) || ((b == 7 || b == 8) && c == 2);
     },
     Y},
    {"{1^a,2^b,3^c}: a>=2, b=0", [](const E& e) { return e.fives == 0 && e.ones >= 2 && e.twos == 0; }, Y},
    {"{1^a,2^b,3^c}: a>=1, c=0", [](const E& e) { return e.fives == 0 && e.ones >= 1 && e.threes == 0; }, Y},
    {"(1,1,3k+5,0)", [](const E& e) { return e.fives == 0 && e.ones == 1 && e.twos == 1 && of_form(e.threes, 3, 5); }, N},
    {"{1^a,2^b,3^c}: a,b,c>=1", [](const E& e) { return e.fives == 0 && e.ones >= 1 && e.twos >= 1 && e.threes >= 1; }, Y},
    {"{1^a,2^b,3^c}: no realizable form", [](const E& e) { return e.fives == 0; }, N},

    // From here on d >= 1.
    {"a+b+c<4 misses a residue class mod 5", [](const E& e) { return e.ones + e.twos + e.threes < 4; }, N},

    {"(1,0,c,1) with c<=3 or c>=8",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.fives == 1 && (e.threes <= 3 || e.threes >= 8); }, N},
    {"(1,0,c,2) with c<=2 or c>=7",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.fives == 2 && (e.threes <= 2 || e.threes >= 7); }, N},
    {"(a,b,c,d) with (a,b,c) in {(1,0,0),(1,0,1),(1,0,2),(1,1,0),(1,1,1),(1,2,0),(2,0,0),(2,0,1),(2,1,0),(3,0,0)}",
     [](const E& e) {
       int a = e.ones, b = e.twos, c = e.threes;
       return (a == 1 && b + c <= 2) || (a == 2 && b + c <= 1) || (a == 3 && b == 0 && c == 0);
     },
     N},
    {"(1,0,3,5k+6), (1,0,3,5k+8), (1,0,3,5k+10)",
     [](const E& e) {
       return e.ones == 1 && e.twos == 0 && e.threes == 3 && (five(e.fives, 6) || five(e.fives, 8) || five(e.fives, 10));
     },
     N},
    {"(1,1,2,5k+7), (1,1,2,5k+9)",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes == 2 && (five(e.fives, 7) || five(e.fives, 9)); }, N},
    {"(1,2,1,5k+8)", [](const E& e) { return e.ones == 1 && e.twos == 2 && e.threes == 1 && five(e.fives, 8); }, N},
    {"(1,3,0,5k+7), (1,3,0,5k+9)",
     [](const E& e) { return e.ones == 1 && e.twos == 3 && e.threes == 0 && (five(e.fives, 7) || five(e.fives, 9)); }, N},
    {"(3,1,0,5k+8)", [](const E& e) { return e.ones == 3 && e.twos == 1 && e.threes == 0 && five(e.fives, 8); }, N},
    {"(4,0,0,5k+8)", [](const E& e) { return e.ones == 4 && e.twos == 0 && e.threes == 0 && five(e.fives, 8); }, N},
    {"a>=1, d>=1 outside the exceptions", [](const E& e) { return e.ones >= 1; }, Y},

    // a = 0
    {"(0,3,1,5k+8)", [](const E& e) { return e.twos == 3 && e.threes == 1 && five(e.fives, 8); }, N},
    {"(0,b,1,1) with b in {7,8} or b>=11",
     [](const E& e) { return e.threes == 1 && e.fives == 1 && (e.twos == 7 || e.twos == 8 || e.twos >= 11); }, N},
    {"{2^b,3^c,5^d}: b>=3, c>=1", [](const E& e) { return e.twos >= 3 && e.threes >= 1; }, Y},

    {"{2^b,5}: b in {5,6}", [](const E& e) { return e.threes == 0 && e.fives == 1 && (e.twos == 5 || e.twos == 6); }, Y},
    {"{2^b,5}: b not in {5,6}", [](const E& e) { return e.threes == 0 && e.fives == 1; }, N},
    {"{2^b,5^2}: b in {4,5,7,8,11,12}",
     [](const E& e) {
       int b = e.twos;
       return e.threes == 0 && e.fives == 2 && (b == 4 || b == 5 || b == 7 || b == 8 || b == 11 || b == 12);
     },
     Y},
    {"{2^b,5^2}: b not in {4,5,7,8,11,12}", [](const E& e) { return e.threes == 0 && e.fives == 2; }, N},
    {"{2^b,5^3}: b>=4", [](const E& e) { return e.threes == 0 && e.fives == 3 && e.twos >= 4; }, Y},
    {"{2^b,5^(5k+3)}: b>=7", [](const E& e) { return e.threes == 0 && five(e.fives, 3) && e.twos >= 7; }, Y},
    {"{2^b,5^(5k+4)}: b>=10", [](const E& e) { return e.threes == 0 && five(e.fives, 4) && e.twos >= 10; }, Y},
    {"{2^b,5^(5k+5)}: b>=8", [](const E& e) { return e.threes == 0 && five(e.fives, 5) && e.twos >= 8; }, Y},
    {"{2^b,5^(5k+6)}: b>=5", [](const E& e) { return e.threes == 0 && five(e.fives, 6) && e.twos >= 5; }, Y},
    {"{2^b,5^(5k+7)}: b>=7", [](const E& e) { return e.threes == 0 && five(e.fives, 7) && e.twos >= 7; }, Y},
    {"(0,4,0,5k+2), (0,4,0,5k+3), (0,4,0,5k+4)",
     [](const E& e) {
       return e.threes == 0 && e.twos == 4 && (five(e.fives, 2) || five(e.fives, 3) || five(e.fives, 4));
     },
     Y},
    {"(0,6,0,5k+1), (0,6,0,5k+5)",
     [](const E& e) { return e.threes == 0 && e.twos == 6 && (five(e.fives, 1) || five(e.fives, 5)); }, Y},
    {"(0,8,0,5k+2)", [](const E& e) { return e.threes == 0 && e.twos == 8 && five(e.fives, 2); }, Y},
    {"(0,5,0,5k+5)", [](const E& e) { return e.threes == 0 && e.twos == 5 && five(e.fives, 5); }, Y},
    {"{2^b,5^d}: not settled by the published families", [](const E& e) { return e.twos >= 3; }, O},

    // a = 0, b = 2
    {"(0,2,3,5k+8)", [](const E& e) { return e.twos == 2 && e.threes == 3 && five(e.fives, 8); }, O},
    {"(0,2,2,5k+7), (0,2,2,5k+8), (0,2,2,5k+9)",
     [](const E& e) {
       return e.twos == 2 && e.threes == 2 && (five(e.fives, 7) || five(e.fives, 8) || five(e.fives, 9));
     },
     N},
    {"{2^2,3^c,5^d}: d>=3, c>=2", [](const E& e) { return e.twos == 2 && e.fives >= 3 && e.threes >= 2; }, Y},
    {"(0,2,2,1)", [](const E& e) { return e.twos == 2 && e.threes == 2 && e.fives == 1; }, Y},
    {"{2^2,3^c,5^d}: d<=2 not settled", [](const E& e) { return e.twos == 2; }, O},

    // a = 0, b = 1
    {"(0,1,4,5k+10)", [](const E& e) { return e.twos == 1 && e.threes == 4 && five(e.fives, 10); }, O},
    {"{2,3^c,5^d}: d>=7, c>=4", [](const E& e) { return e.twos == 1 && e.fives >= 7 && e.threes >= 4; }, Y},
    {"{2,3^c,5^d}: d>=7, c<=3", [](const E& e) { return e.twos == 1 && e.fives >= 7; }, N},
    {"(0,1,3,d) with d>=6", [](const E& e) { return e.twos == 1 && e.threes == 3 && e.fives >= 6; }, N},
    {"{2,3^c,5^4}: c>=3, c = 0,2 mod 3",
     [](const E& e) { return e.twos == 1 && e.fives == 4 && e.threes >= 3 && e.threes % 3 != 1; }, Y},
    {"{2,3^c,5^5}: c>=3, c = 0,1 mod 3",
     [](const E& e) { return e.twos == 1 && e.fives == 5 && e.threes >= 3 && e.threes % 3 != 2; }, Y},
    {"(0,1,3,4), (0,1,3,5), (0,1,5,4)",
     [](const E& e) {
       return e.twos == 1 && ((e.threes == 3 && (e.fives == 4 || e.fives == 5)) || (e.threes == 5 && e.fives == 4));
     },
     Y},
    {"(0,1,4,5k+3)", [](const E& e) { return e.twos == 1 && e.threes == 4 && five(e.fives, 3); }, Y},
    {"{2,3^c,5^d}: d<=6 not settled", [](const E& e) { return e.twos == 1; }, O},

    // a = 0, b = 0
    {"(0,0,6,5k+2), (0,0,6,5k+3)", [](const E& e) { return e.threes == 6 && (five(e.fives, 2) || five(e.fives, 3)); }, Y},
    {"(0,0,4,4)", [](const E& e) { return e.threes == 4 && e.fives == 4; }, Y},
    {"{3^c,5^d}: not settled", [](const E&) { return true; }, O},
};

}  // namespace

std::span<const Clause> linear_clauses() { return kClauses; }

const Clause& classify_linear(const Exponents& e) {
  if (e.ones < 0 || e.twos < 0 || e.threes < 0 || e.fives < 0) throw std::invalid_argument("negative exponent");
  for (const auto& clause : kClauses)
    if (clause.match(e)) return clause;
  return kClauses[std::size(kClauses) - 1];
}

}  // namespace bhr::detail
