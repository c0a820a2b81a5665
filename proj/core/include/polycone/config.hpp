#pragma once

#include <cstddef>

namespace polycone {

// Double-description conversions refuse cones above this ambient dimension.
// Default 12; POLYCONE_DIM_CAP overrides; set_dim_cap overrides both.
std::size_t dim_cap();
void set_dim_cap(std::size_t cap);

// Worker threads for the enumeration fan-outs. Default 1;
// POLYCONE_THREADS overrides; set_thread_count overrides both.
std::size_t thread_count();
void set_thread_count(std::size_t n);

}  // namespace polycone
