#include "steinchar/characters.hpp"
#include "steinchar/spherical.hpp"

namespace steinchar {

DecompositionTable builtin_table(Family f, std::size_t n) {
  switch (f) {
    case Family::USp: return usp_table(n);
    case Family::SOOdd: return so_odd_table(n);
    case Family::OEven: return o_even_table(n);
    case Family::U: return u_table(n);
    case Family::Sphere: return sphere_table(n);
    case Family::COE: return coe_table(n);
    case Family::CSE: return cse_table(n);
  }
  throw std::logic_error("unknown family");
}

}  // namespace steinchar
