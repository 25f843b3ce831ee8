/*!
  \file npn.hpp
  \brief NPN canonization of functions with up to four inputs.
*/

#pragma once

#include <aigkit/truth_table.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace aigkit
{

/*! \brief Input permutation, input negation and output negation.

  Applying the transform to f yields g(x) = out_neg ^ f(z) with
  z[i] = x[perm[i]] ^ bit i of input_neg.
*/
struct npn_transform
{
  std::array<std::uint8_t, 4> perm{ 0, 1, 2, 3 };
  std::uint8_t input_neg{ 0 };
  bool output_neg{ false };

  bool operator==( const npn_transform& ) const = default;
};

struct npn_class
{
  truth_table canonical;
  /*! \brief apply_npn_transform( canonical, transform ) reproduces the input function. */
  npn_transform transform;
};

truth_table apply_npn_transform( const truth_table& tt, const npn_transform& t );

/*! \brief Inverse transform: apply(apply(f, t), inverse(t)) == f. */
npn_transform inverse( const npn_transform& t, std::uint32_t num_vars );

/*! \brief Canonical form by exhaustive search; the minimum table over every transform. */
npn_class npn_canonicalize( const truth_table& tt );

/*! \brief Precomputed class data for one 16-bit function of four variables. */
struct npn4_entry
{
  std::uint16_t canonical{ 0 };
  std::uint16_t class_index{ 0 };
  npn_transform transform;  // function = apply(canonical, transform)
};

/*! \brief Lookup table over all 65,536 four-input functions, built once on first use. */
class npn4_table
{
public:
  static const npn4_table& instance();

  const npn4_entry& operator[]( std::uint16_t function ) const { return entries_[function]; }
  const std::vector<std::uint16_t>& representatives() const { return representatives_; }
  std::size_t num_classes() const { return representatives_.size(); }

private:
  npn4_table();

  std::vector<npn4_entry> entries_;
  std::vector<std::uint16_t> representatives_;
};

/*! \brief Applies a transform to a 16-bit four-variable table. */
std::uint16_t apply_npn4( std::uint16_t tt, const npn_transform& t );

} // namespace aigkit
