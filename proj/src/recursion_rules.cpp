#include "rules.hpp"

namespace bhr::detail {

namespace {

using E = Exponents;

constexpr bool m5(int d, int r) { return d % 5 == r; }

// Each guard reads (a,b,c,d) = (ones, twos, threes, fives). The left part is
// a perfect realization; the remainder is whatever is left of the list.
constexpr Recursion kRecursions[] = {
    // {2^b, 3^c, 5}
    {"{2^5,3^c,5} = R{2^2,3^3} + r{2^3,3^(c-3),5}",
     [](const E& e) { return e.ones == 0 && e.twos == 5 && e.threes >= 4 && e.fives == 1; },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^b,3^3,5} = R{2^4,3} + r{2^(b-4),3^2,5}",
     [](const E& e) { return e.ones == 0 && e.twos >= 6 && e.threes == 3 && e.fives == 1; },
     [](const E&) { return E{0, 4, 1, 0}; }},
    {"{2^b,3^4,5} = R{2^4,3^2} + r{2^(b-4),3^2,5}",
     [](const E& e) { return e.ones == 0 && e.twos >= 6 && e.threes == 4 && e.fives == 1; },
     [](const E&) { return E{0, 4, 2, 0}; }},
    {"{2^b,3^5,5} = R{2^2,3^3} + r{2^(b-2),3^2,5}",
     [](const E& e) { return e.ones == 0 && e.twos >= 6 && e.threes == 5 && e.fives == 1; },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^b,3^c,5} = R{2^2,3^3,5} + r{2^(b-2),3^(c-3)}",
     [](const E& e) { return e.ones == 0 && e.twos >= 6 && e.threes >= 6 && e.fives == 1; },
     [](const E&) { return E{0, 2, 3, 1}; }},

    // {2^b, 3^c, 5^2}
    {"{2^b,3^c,5^2} = R{2^2,3^3} + r{2^(b-2),3^(c-3),5^2} for 5<=b<=8",
     [](const E& e) { return e.ones == 0 && e.twos >= 5 && e.twos <= 8 && e.threes >= 4 && e.fives == 2; },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^b,3^c,5^2} = R{2^6,5} + r{2^(b-6),3^c,5} for b>=9",
     [](const E& e) { return e.ones == 0 && e.twos >= 9 && e.fives == 2; },
     [](const E&) { return E{0, 6, 0, 1}; }},

    // {2^b, 5^d}
    {"{2^b,5^(5k+6)} = R{2^4,5^(5k+3)} + r{2^(b-4),5^3}",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos >= 8 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E& e) { return E{0, 4, 0, e.fives - 3}; }},
    {"{2^8,5^(5k+8)} = R{2^4,5^4} + R{2^4,5^(5k+4)}",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos == 8 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^9,5^(5k+8)} = R{2^4,5^3} + r{2^5,5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos == 9 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E&) { return E{0, 4, 0, 3}; }},
    {"{2^b,5^(5k+8)} = R{2^6,5^(5k+5)} + r{2^(b-6),5^3} for b>=10",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos >= 10 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 6, 0, e.fives - 3}; }},
    {"{2^b,5^(5k+4)} = R{2^6,5^(5k+1)} + r{2^(b-6),5^3} for b>=10",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos >= 10 && e.fives >= 4 && m5(e.fives, 4); },
     [](const E& e) { return E{0, 6, 0, e.fives - 3}; }},
    {"{2^8,5^(5k+5)} = R{2^4,5^3} + r{2^4,5^(5k+2)}",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos == 8 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E&) { return E{0, 4, 0, 3}; }},
    {"{2^b,5^(5k+5)} = R{2^4,5^4} + r{2^(b-4),5^(5k+1)} for 9<=b<=10",
     [](const E& e) {
       return e.ones == 0 && e.threes == 0 && (e.twos == 9 || e.twos == 10) && e.fives >= 5 && m5(e.fives, 0);
     },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^11,5^(5k+10)} = R{2^4,5^4} + r{2^7,5^(5k+6)}",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos == 11 && e.fives >= 10 && m5(e.fives, 0); },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^b,5^(5k+5)} = R{2^8,5^(5k+2)} + r{2^(b-8),5^3} for b>=12",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos >= 12 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E& e) { return E{0, 8, 0, e.fives - 3}; }},
    {"{2^b,5^(5k+7)} = R{2^4,5^(5k+4)} + r{2^(b-4),5^3} for b>=8",
     [](const E& e) { return e.ones == 0 && e.threes == 0 && e.twos >= 8 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E& e) { return E{0, 4, 0, e.fives - 3}; }},

    // {2, 3^c, 5^d}
    {"{2,3^8,5^(5k+7)} = R{3^4,5^4} + r{2,3^4,5^(5k+3)}",
     [](const E& e) { return e.ones == 0 && e.twos == 1 && e.threes == 8 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2,3^c,5^(5k+7)} = R{3^6,5^(5k+2)} + r{2,3^(c-6),5^5} for c=1 mod 3",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 9 && e.threes % 3 == 1 && e.fives >= 7 && m5(e.fives, 2);
     },
     [](const E& e) { return E{0, 0, 6, e.fives - 5}; }},
    {"{2,3^c,5^(5k+7)} = R{3^6,5^(5k+3)} + r{2,3^(c-6),5^4} for c=0,2 mod 3",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 9 && e.threes % 3 != 1 && e.fives >= 7 && m5(e.fives, 2);
     },
     [](const E& e) { return E{0, 0, 6, e.fives - 4}; }},
    {"{2,3^9,5^(5k+9)} = R{3^4,5^4} + r{2,3^5,5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 1 && e.threes == 9 && e.fives >= 9 && m5(e.fives, 4); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2,3^c,5^(5k+9)} = R{3^6,5^2} + r{2,3^(c-6),5^(5k+7)}",
     [](const E& e) { return e.ones == 0 && e.twos == 1 && e.threes >= 10 && e.fives >= 9 && m5(e.fives, 4); },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{2,3^8,5^(5k+6)} = R{3^4,5^4} + r{2,3^4,5^(5k+2)}",
     [](const E& e) { return e.ones == 0 && e.twos == 1 && e.threes == 8 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2,3^(3t+9),5^(5k+6)} = R{3^6,5^(5k+2)} + r{2,3^(3t+3),5^4}",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 9 && e.threes % 3 == 0 && e.fives >= 6 && m5(e.fives, 1);
     },
     [](const E& e) { return E{0, 0, 6, e.fives - 4}; }},
    {"{2,3^(3t+10),5^(5k+11)} = R{3^6,5^2} + r{2,3^(3t+4),5^(5k+9)}",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 10 && e.threes % 3 == 1 && e.fives >= 11 && m5(e.fives, 1);
     },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{2,3^(3t+11),5^(5k+6)} = R{3^6,5^(5k+2)} + r{2,3^(3t+5),5^4}",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 11 && e.threes % 3 == 2 && e.fives >= 6 && m5(e.fives, 1);
     },
     [](const E& e) { return E{0, 0, 6, e.fives - 4}; }},
    {"{2,3^8,5^(5k+8)} = R{3^4,5^4} + r{2,3^4,5^(5k+4)}",
     [](const E& e) { return e.ones == 0 && e.twos == 1 && e.threes == 8 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2,3^c,5^(5k+8)} = R{3^6,5^(5k+3)} + r{2,3^(c-6),5^5} for c=0,1 mod 3",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 9 && e.threes % 3 != 2 && e.fives >= 8 && m5(e.fives, 3);
     },
     [](const E& e) { return E{0, 0, 6, e.fives - 5}; }},
    {"{2,3^(3t+11),5^(5k+8)} = R{3^6,5^(5k+2)} + r{2,3^(3t+5),5^6}",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && e.threes >= 11 && e.threes % 3 == 2 && e.fives >= 8 && m5(e.fives, 3);
     },
     [](const E& e) { return E{0, 0, 6, e.fives - 6}; }},
    {"{2,3^c,5^(5k+5)} = R{3^4,5^4} + r{2,3^(c-4),5^(5k+1)} for c=8,9",
     [](const E& e) {
       return e.ones == 0 && e.twos == 1 && (e.threes == 8 || e.threes == 9) && e.fives >= 5 && m5(e.fives, 0);
     },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2,3^c,5^(5k+10)} = R{3^6,5^3} + r{2,3^(c-6),5^(5k+7)}",
     [](const E& e) { return e.ones == 0 && e.twos == 1 && e.threes >= 10 && e.fives >= 10 && m5(e.fives, 0); },
     [](const E&) { return E{0, 0, 6, 3}; }},

    // {2^2, 3^c, 5^d}
    {"{2^2,3^7,5^(5k+6)} = R{3^4,5^4} + r{2^2,3^3,5^(5k+2)}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes == 7 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^2,3^c,5^(5k+6)} = R{3^6,5^(5k+3)} + r{2^2,3^(c-6),5^3}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes >= 8 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E& e) { return E{0, 0, 6, e.fives - 3}; }},
    {"{2^2,3^c,5^(5k+5)} = R{3^4,5^4} + r{2^2,3^(c-4),5^(5k+1)} for c=6,7",
     [](const E& e) {
       return e.ones == 0 && e.twos == 2 && (e.threes == 6 || e.threes == 7) && e.fives >= 5 && m5(e.fives, 0);
     },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^2,3^c,5^(5k+5)} = R{3^6,5^(5k+2)} + r{2^2,3^(c-6),5^3}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes >= 8 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E& e) { return E{0, 0, 6, e.fives - 3}; }},
    {"{2^2,3^c,5^(5k+7)} = R{3^6,5^2} + r{2^2,3^(c-6),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes >= 8 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{2^2,3^c,5^(5k+9)} = R{3^4,5^4} + r{2^2,3^(c-4),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes >= 6 && e.fives >= 9 && m5(e.fives, 4); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^2,3^7,5^(5k+8)} = R{3^4,5^4} + r{2^2,3^3,5^(5k+4)}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes == 7 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^2,3^c,5^(5k+8)} = R{3^6,5^3} + r{2^2,3^(c-6),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 2 && e.threes >= 8 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E&) { return E{0, 0, 6, 3}; }},

    // {2^3, 3^c, 5^d}
    {"{2^3,3^5,5^d} = R{3^4,5^4} + r{2^3,3,5^(d-4)} for d>=4, d!=2 mod 5",
     [](const E& e) { return e.ones == 0 && e.twos == 3 && e.threes == 5 && e.fives >= 4 && !m5(e.fives, 2); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^3,3^c,5^3} = R{3^6,5^2} + r{2^3,3^(c-6),5}",
     [](const E& e) { return e.ones == 0 && e.twos == 3 && e.threes >= 7 && e.fives == 3; },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{2^3,3^c,5^4} = R{3^6,5^2} + r{2^3,3^(c-6),5^2}",
     [](const E& e) { return e.ones == 0 && e.twos == 3 && e.threes >= 7 && e.fives == 4; },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{2^3,3^c,5^5} = R{3^6,5^3} + r{2^3,3^(c-6),5^2}",
     [](const E& e) { return e.ones == 0 && e.twos == 3 && e.threes >= 7 && e.fives == 5; },
     [](const E&) { return E{0, 0, 6, 3}; }},
    {"{2^3,3^c,5^d} = R{3^4,5^4} + r{2^3,3^(c-4),5^(d-4)} for c>=6, d>=6",
     [](const E& e) { return e.ones == 0 && e.twos == 3 && e.threes >= 6 && e.fives >= 6; },
     [](const E&) { return E{0, 0, 4, 4}; }},

    // b >= 4, d = 3 mod 5
    {"{2^4,3^6,5^(5k+3)} = R{2^2,3^3,5} + r{2^2,3^3,5^(5k+2)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes == 6 && m5(e.fives, 3); },
     [](const E&) { return E{0, 2, 3, 1}; }},
    {"{2^4,3^c,5^(5k+3)} = R{2^2,3^3} + R{2^2,3^(c-3),5^(5k+3)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes >= 7 && m5(e.fives, 3); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^5,3^c,5^(5k+3)} = R{2^2,3^3} + r{2^3,3^(c-3),5^(5k+3)}",
     [](const E& e) { return e.ones == 0 && e.twos == 5 && e.threes >= 5 && m5(e.fives, 3); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^6,3^2,5^(5k+3)} = R{2^4,5^(5k+3)} + r{2^2,3^2}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes == 2 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 4, 0, e.fives}; }},
    {"{2^6,3^c,5^(5k+3)} = R{2^2,3^3} + r{2^4,3^(c-3),5^(5k+3)}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes >= 3 && m5(e.fives, 3); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^7,3^c,5^(5k+3)} = R{2^4,5^(5k+3)} + r{2^3,3^c} for 1<=c<=8",
     [](const E& e) { return e.ones == 0 && e.twos == 7 && e.threes >= 1 && e.threes <= 8 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 4, 0, e.fives}; }},
    {"{2^7,3^c,5^(5k+3)} = R{3^6,5^(5k+3)} + r{2^7,3^(c-6)} for c>=9",
     [](const E& e) { return e.ones == 0 && e.twos == 7 && e.threes >= 9 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 0, 6, e.fives}; }},
    {"{2^8,3,5^(5k+3)} = R{2^4,5^(5k+3)} + R{2^4,3}",
     [](const E& e) { return e.ones == 0 && e.twos == 8 && e.threes == 1 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 4, 0, e.fives}; }},
    {"{2^b,3,5^(5k+3)} = R{2^6,5^(5k+1)} + r{2^(b-6),3,5^2} for b>=9",
     [](const E& e) { return e.ones == 0 && e.twos >= 9 && e.threes == 1 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 6, 0, e.fives - 2}; }},
    {"{2^8,3^2,5^(5k+3)} = R{2^4,3} + r{2^4,3,5^(5k+3)}",
     [](const E& e) { return e.ones == 0 && e.twos == 8 && e.threes == 2 && m5(e.fives, 3); },
     [](const E&) { return E{0, 4, 1, 0}; }},
    {"{2^b,3^2,5^(5k+3)} = R{2^6,3,5^(5k+1)} + r{2^(b-6),3,5^2} for b>=9",
     [](const E& e) { return e.ones == 0 && e.twos >= 9 && e.threes == 2 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 6, 1, e.fives - 2}; }},
    {"{2^b,3^c,5^(5k+3)} = R{2^4,5^(5k+3)} + r{2^(b-4),3^c} for b>=8, c>=3",
     [](const E& e) { return e.ones == 0 && e.twos >= 8 && e.threes >= 3 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 4, 0, e.fives}; }},

    // b >= 4, d = 2 mod 5
    {"{2^b,3,5^(5k+7)} = R{2^4,5^4} + r{2^(b-4),3,5^(5k+3)} for b>=8",
     [](const E& e) { return e.ones == 0 && e.twos >= 8 && e.threes == 1 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^b,3^2,5^(5k+7)} = R{2^4,5^4} + r{2^(b-4),3^2,5^(5k+3)} for b>=7",
     [](const E& e) { return e.ones == 0 && e.twos >= 7 && e.threes == 2 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^6,3^3,5^(5k+2)} = R{2^2,3^3} + r{2^4,5^(5k+2)}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes == 3 && m5(e.fives, 2); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^b,3^3,5^(5k+7)} = R{2^4,5^4} + r{2^(b-4),3^3,5^(5k+3)} for b>=7",
     [](const E& e) { return e.ones == 0 && e.twos >= 7 && e.threes == 3 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^4,3^4,5^(5k+7)} = R{3^4,5^4} + R{2^4,5^(5k+3)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes == 4 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^b,3^4,5^(5k+7)} = R{2^2,3^3} + r{2^(b-2),3,5^(5k+7)} for b>=5",
     [](const E& e) { return e.ones == 0 && e.twos >= 5 && e.threes == 4 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^b,3^c,5^(5k+7)} = R{3^4,5^4} + r{2^b,3^(c-4),5^(5k+3)} for c>=5",
     [](const E& e) { return e.ones == 0 && e.twos >= 4 && e.threes >= 5 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 0, 4, 4}; }},

    // b >= 4, d = 1 mod 5
    {"{2^4,3^c,5^(5k+6)} = R{3^4,5^4} + r{2^4,3^(c-4),5^(5k+2)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes >= 4 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^5,3^c,5^(5k+1)} = R{2^2,3^3} + r{2^3,3^(c-3),5^(5k+1)}",
     [](const E& e) { return e.ones == 0 && e.twos == 5 && e.threes >= 4 && m5(e.fives, 1); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^6,3^c,5^(5k+6)} = R{2^4,3} + r{2^2,3^(c-1),5^(5k+6)}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes >= 3 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E&) { return E{0, 4, 1, 0}; }},
    {"{2^b,3^c,5^(5k+6)} = R{2^4,5^(5k+4)} + r{2^(b-4),3^c,5^2} for b>=7",
     [](const E& e) { return e.ones == 0 && e.twos >= 7 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E& e) { return E{0, 4, 0, e.fives - 2}; }},

    // b >= 4, d = 0 mod 5
    {"{2^4,3^c,5^(5k+5)} = R{2^2,3^3} + r{2^2,3^(c-3),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes >= 5 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^5,3^c,5^(5k+5)} = R{2^2,3^3} + r{2^3,3^(c-3),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 5 && e.threes >= 4 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^6,3^2,5^(5k+5)} = R{2^4,5^(5k+4)} + r{2^2,3^2,5}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes == 2 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E& e) { return E{0, 4, 0, e.fives - 1}; }},
    {"{2^6,3^c,5^(5k+5)} = R{2^2,3^3} + r{2^4,3^(c-3),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes >= 4 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E&) { return E{0, 2, 3, 0}; }},
    {"{2^b,3^c,5^(5k+5)} = R{2^4,5^(5k+3)} + r{2^(b-4),3^c,5^2} for b>=7",
     [](const E& e) { return e.ones == 0 && e.twos >= 7 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E& e) { return E{0, 4, 0, e.fives - 2}; }},

    // b >= 4, d = 4 mod 5
    {"{2^4,3^4,5^(5k+4)} = R{2^2,3^2,5^3} + r{2^2,3^2,5^(5k+1)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes == 4 && m5(e.fives, 4); },
     [](const E&) { return E{0, 2, 2, 3}; }},
    {"{2^4,3^c,5^4} = R{3^4,5^4} + r{2^4,3^(c-4)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes >= 5 && e.fives == 4; },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^4,3^c,5^(5k+9)} = R{3^4,5^4} + r{2^4,3^(c-4),5^(5k+5)}",
     [](const E& e) { return e.ones == 0 && e.twos == 4 && e.threes >= 5 && e.fives >= 9 && m5(e.fives, 4); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{2^b,3,5^(5k+4)} = R{2^4,5^(5k+3)} + r{2^(b-4),3,5} for 7<=b<=10",
     [](const E& e) { return e.ones == 0 && e.twos >= 7 && e.twos <= 10 && e.threes == 1 && m5(e.fives, 4); },
     [](const E& e) { return E{0, 4, 0, e.fives - 1}; }},
    {"{2^b,3,5^(5k+4)} = R{2^8,5^(5k+2)} + r{2^(b-8),3,5^2} for b>=11",
     [](const E& e) { return e.ones == 0 && e.twos >= 11 && e.threes == 1 && m5(e.fives, 4); },
     [](const E& e) { return E{0, 8, 0, e.fives - 2}; }},
    {"{2^5,3^c,5^(5k+4)} = R{2^2,3^2,5^3} + r{2^3,3^(c-2),5^(5k+1)} for c>=3",
     [](const E& e) { return e.ones == 0 && e.twos == 5 && e.threes >= 3 && m5(e.fives, 4); },
     [](const E&) { return E{0, 2, 2, 3}; }},
    {"{2^6,3^c,5^4} = R{2^4,5^4} + r{2^2,3^c} for c=2,3",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && (e.threes == 2 || e.threes == 3) && e.fives == 4; },
     [](const E&) { return E{0, 4, 0, 4}; }},
    {"{2^6,3^c,5^4} = R{2^2,3^3,5} + r{2^4,3^(c-3),5^3} for c>=4",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes >= 4 && e.fives == 4; },
     [](const E&) { return E{0, 2, 3, 1}; }},
    {"{2^6,3^c,5^(5k+9)} = R{2^4,5^3} + r{2^2,3^c,5^(5k+6)}",
     [](const E& e) { return e.ones == 0 && e.twos == 6 && e.threes >= 2 && e.fives >= 9 && m5(e.fives, 4); },
     [](const E&) { return E{0, 4, 0, 3}; }},
    {"{2^b,3^c,5^(5k+4)} = R{2^4,5^(5k+3)} + r{2^(b-4),3^c,5} for b>=7, c>=2",
     [](const E& e) { return e.ones == 0 && e.twos >= 7 && e.threes >= 2 && m5(e.fives, 4); },
     [](const E& e) { return E{0, 4, 0, e.fives - 1}; }},

    // {1, 3^c, 5^d}
    {"{1,3^8,5^(5k+6)} = R{3^4,5^4} + R{1,3^4,5^(5k+2)}",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes == 8 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{1,3^c,5^(5k+6)} = R{3^6,5^(5k+2)} + r{1,3^(c-6),5^4} for c>=9",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes >= 9 && e.fives >= 6 && m5(e.fives, 1); },
     [](const E& e) { return E{0, 0, 6, e.fives - 4}; }},
    {"{1,3^8,5^(5k+7)} = R{3^4,5^4} + r{1,3^4,5^(5k+3)}",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes == 8 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{1,3^c,5^(5k+7)} = R{3^6,5^(5k+3)} + r{1,3^(c-6),5^4} for c>=9",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes >= 9 && e.fives >= 7 && m5(e.fives, 2); },
     [](const E& e) { return E{0, 0, 6, e.fives - 4}; }},
    {"{1,3^8,5^(5k+5)} = R{3^4,5^4} + r{1,3^4,5^(5k+1)}",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes == 8 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{1,3^c,5^(5k+5)} = R{3^6,5^(5k+2)} + r{1,3^(c-6),5^3} for c>=9",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes >= 9 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E& e) { return E{0, 0, 6, e.fives - 3}; }},
    {"{1,3^c,5^(5k+9)} = R{3^4,5^4} + r{1,3^(c-4),5^(5k+5)} for c>=8",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes >= 8 && e.fives >= 9 && m5(e.fives, 4); },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{1,3^c,5^(5k+8)} = R{3^4,5^4} + r{1,3^(c-4),5^(5k+4)} for c>=7",
     [](const E& e) { return e.ones == 1 && e.twos == 0 && e.threes >= 7 && e.fives >= 8 && m5(e.fives, 3); },
     [](const E&) { return E{0, 0, 4, 4}; }},

    // {1, 2, 3^c, 5^d}
    {"{1,2,3^c,5^2} = R{3^6,5^2} + r{1,2,3^(c-6)} for c>=6, c=0,1 mod 3",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes >= 6 && e.threes % 3 != 2 && e.fives == 2; },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{1,2,3^c,5^3} = R{3^6,5^3} + r{1,2,3^(c-6)} for c>=6, c=0,1 mod 3",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes >= 6 && e.threes % 3 != 2 && e.fives == 3; },
     [](const E&) { return E{0, 0, 6, 3}; }},
    {"{1,2,3^c,5^4} = R{3^4,5^4} + r{1,2,3^(c-4)} for c>=4, c=1,2 mod 3",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes >= 4 && e.threes % 3 != 0 && e.fives == 4; },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{1,2,3^(3t+9),5^4} = R{3^6,5^2} + r{1,2,3^(3t+3),5^2}",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes >= 9 && e.threes % 3 == 0 && e.fives == 4; },
     [](const E&) { return E{0, 0, 6, 2}; }},
    {"{1,2,3^c,5^5} = R{3^4,5^4} + r{1,2,3^(c-4),5} for c>=6",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes >= 6 && e.fives == 5; },
     [](const E&) { return E{0, 0, 4, 4}; }},
    {"{1,2,3^c,5^6} = R{3^4,5^4} + r{1,2,3^(c-4),5^2} for c>=6",
     [](const E& e) { return e.ones == 1 && e.twos == 1 && e.threes >= 6 && e.fives == 6; },
     [](const E&) { return E{0, 0, 4, 4}; }},

    // {1, 2^b, 5^d}
    {"{1,2^b,5^2} = R{2^6,5} + r{1,2^(b-6),5} for b>=9",
     [](const E& e) { return e.ones == 1 && e.twos >= 9 && e.threes == 0 && e.fives == 2; },
     [](const E&) { return E{0, 6, 0, 1}; }},
    {"{1,2^b,5^(5k+3)} = R{2^4,5^(5k+3)} + r{1,2^(b-4)} for b=4,5,6",
     [](const E& e) { return e.ones == 1 && e.twos >= 4 && e.twos <= 6 && e.threes == 0 && m5(e.fives, 3); },
     [](const E& e) { return E{0, 4, 0, e.fives}; }},
    {"{1,2^b,5^(5k+4)} = R{2^4,5^(5k+4)} + r{1,2^(b-4)} for 4<=b<=9",
     [](const E& e) { return e.ones == 1 && e.twos >= 4 && e.twos <= 9 && e.threes == 0 && m5(e.fives, 4); },
     [](const E& e) { return E{0, 4, 0, e.fives}; }},
    {"{1,2^7,5^(5k+5)} = R{2^4,5^(5k+4)} + r{1,2^3,5}",
     [](const E& e) { return e.ones == 1 && e.twos == 7 && e.threes == 0 && e.fives >= 5 && m5(e.fives, 0); },
     [](const E& e) { return E{0, 4, 0, e.fives - 1}; }},
    {"{1,2^b,3,5} = R{2^4,3} + r{1,2^(b-4),5} for b>=8",
     [](const E& e) { return e.ones == 1 && e.twos >= 8 && e.threes == 1 && e.fives == 1; },
     [](const E&) { return E{0, 4, 1, 0}; }},

    // {1^2, 3^c, 5^2}
    {"{1^2,3^c,5^2} = R{3^6,5^2} + r{1^2,3^(c-6)} for c>=6",
     [](const E& e) { return e.ones == 2 && e.twos == 0 && e.threes >= 6 && e.fives == 2; },
     [](const E&) { return E{0, 0, 6, 2}; }},
};

}  // namespace

std::span<const Recursion> linear_recursions() { return kRecursions; }

}  // namespace bhr::detail
