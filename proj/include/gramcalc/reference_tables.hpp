#pragma once

// Reference table rows as originally printed. Two rows are known misprints;
// see data/errata.json.

#include <string>
#include <vector>

namespace gramcalc::tables {

struct Row {
    int n;
    const char* poly;
};

inline const std::vector<Row> A = {
    {1, "x*y"},
    {2, "x*y^2 + x^2*y"},
    {3, "x*y^3 + 4*x^2*y^2 + x^3*y"},
    {4, "x*y^4 + 11*x^2*y^3 + 11*x^3*y^2 + x^4*y"},
    {5, "x*y^5 + 26*x^2*y^4 + 66*x^3*y^3 + 26*x^4*y^2 + x^5*y"},
    {6, "x*y^6 + 57*x^2*y^5 + 302*x^3*y^4 + 302*x^4*y^3 + 57*x^5*y^2 + x^6*y"},
};

// In the basis u = xy, v = x + y.
inline const std::vector<Row> gamma = {
    {1, "u"},
    {2, "u*v"},
    {3, "u*v^2 + 2*u^2"},
    {4, "u*v^3 + 8*u^2*v"},
    {5, "u*v^4 + 22*u^2*v^2 + 16*u^3"},
    {6, "u*v^5 + 52*u^2*v^3 + 136*u^3*v"},
};

inline const std::vector<Row> D = {
    {0, "v"},
    {1, "u"},
    {2, "2*u*v"},
    {3, "4*u*v^2 + 2*u^2"},
    {4, "8*u*v^3 + 16*u^2*v"},
    {5, "16*u*v^4 + 88*u^2*v^2 + 16*u^3"},
    {6, "32*u*v^5 + 416*u^2*v^3 + 272*u^3*v"},
};

inline const std::vector<Row> E = {
    {1, "u"},
    {2, "u*v"},
    {3, "u*v^2 + u^2"},
    {4, "u*v^3 + 4*u^2*v"},
    {5, "u*v^4 + 11*u^2*v^2 + 4*u^3"},
    {6, "u*v^5 + 26*u^2*v^3 + 34*u^3*v"},
};

inline const std::vector<Row> L = {
    {0, "x"},
    {1, "x*y"},
    {2, "x*y^2 + x^3"},
    {3, "x*y^3 + 5*x^3*y"},
    {4, "x*y^4 + 18*x^3*y^2 + 5*x^5"},
    {5, "x*y^5 + 58*x^3*y^3 + 61*x^5*y"},
    {6, "x*y^6 + 179*x^3*y^4 + 479*x^5*y^2 + 61*x^7"},
};

inline const std::vector<Row> W = {
    {0, "y"},
    {1, "x^2"},
    {2, "2*x^2*y"},
    {3, "4*x^2*y^2 + 2*x^4"},
    {4, "8*x^2*y^3 + 16*x^4*y"},
    {5, "16*x^2*y^4 + 88*x^4*y^2 + 16*x^6"},
    {6, "32*x^2*y^5 + 416*x^4*y^3 + 272*x^6*y"},
};

inline const std::vector<Row> P = {
    {1, "1 + x^2"},
    {2, "2*x + 2*x^3"},
    {3, "2 + 8*x^2 + 6*x^4"},
    {4, "16*x + 40*x^3 + 24*x^5"},
    {5, "16 + 136*x^2 + 240*x^4 + 120*x^6"},
    {6, "272*x + 1232*x^3 + 1680*x^5 + 720*x^7"},
};

inline const std::vector<Row> Q = {
    {1, "x"},
    {2, "1 + x^2"}, // misprint; corrected value 1 + 2*x^2
    {3, "5*x + 6*x^3"},
    {4, "5 + 28*x^2 + 24*x^4"},
    {5, "61*x + 180*x^3 + 120*x^5"},
    {6, "61 + 662*x^2 + 1320*x^4 + 720*x^6"},
};

// D^n(a) for a -> av, v -> u, u -> 2uv.
inline const std::vector<Row> Da = {
    {1, "a*v"},
    {2, "a*(v^2 + v*u)"}, // misprint; corrected value a*(v^2 + u)
    {3, "a*(v^3 + 5*v*u)"},
    {4, "a*(v^4 + 18*v^2*u + 5*u^2)"},
    {5, "a*(v^5 + 58*v^3*u + 61*v*u^2)"},
    {6, "a*(v^6 + 179*v^4*u + 479*v^2*u^2 + 61*u^3)"},
};

inline const char* Q2_corrected = "1 + 2*x^2";
inline const char* Da2_corrected = "a*(v^2 + u)";

inline const std::vector<long> p_at_one = {1, 2, 4, 16, 80, 512, 3904, 34816, 354560, 4063232};

} // namespace gramcalc::tables
