#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace polycone {

// mpq_class keeps itself canonical (lowest terms, positive denominator) as
// long as results go through its operators; never store expression
// templates in `auto`.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Accepts "p", "-p", "p/q". Throws ParseError.
Rat parse_rat(const std::string& text);
std::string format_rat(const Rat& r);
std::string format_vec(const RatVec& v);

RatVec zeros(std::size_t n);
RatVec unit(std::size_t n, std::size_t i);

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);
RatVec neg(const RatVec& v);
void axpy(const Rat& s, const RatVec& x, RatVec& y);  // y += s*x

bool is_zero(const RatVec& v);
Rat norm1(const RatVec& v);
Rat norm2sq(const RatVec& v);

// Positive multiple with coprime integer entries; zero stays zero.
RatVec primitive(const RatVec& v);

RatMat transpose(const RatMat& m, std::size_t cols);

// Sort lexicographically and drop duplicates.
void sort_unique(RatMat& vs);

void check_dim(const RatVec& v, std::size_t n, const char* what);

}  // namespace polycone

namespace polycone {

// center + step * k for integer vectors k with ||step * k||_1 <= radius, in
// lexicographic order of k.
RatMat lattice_l1_ball(const RatVec& center, const Rat& step, const Rat& radius);

}  // namespace polycone
