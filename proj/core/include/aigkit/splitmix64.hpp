/*!
  \file splitmix64.hpp
  \brief SplitMix64, the generator behind every random draw of the augmentation flows.

  Chosen for cross-language reproducibility: seeded with 0, the first output
  is 0xE220A8397B1DCDAF.
*/

#pragma once

#include <cstdint>

namespace aigkit
{

class splitmix64
{
public:
  using result_type = std::uint64_t;

  explicit constexpr splitmix64( std::uint64_t seed = 0 ) : state_( seed ) {}

  constexpr std::uint64_t next()
  {
    std::uint64_t z = ( state_ += 0x9E3779B97F4A7C15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xBF58476D1CE4E5B9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94D049BB133111EBull;
    return z ^ ( z >> 31 );
  }
  constexpr std::uint64_t operator()() { return next(); }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{ 0 }; }

private:
  std::uint64_t state_;
};

} // namespace aigkit
