#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aigkit
{

enum class errc
{
  parse_error,
  unsupported_feature,
  unsupported_directive,
  duplicate_cell,
  unknown_cell,
  multiple_drivers,
  undriven_net,
  unsupported_operator,
  width_mismatch,
  cycle_detected,
  stale_candidate,
  interface_mismatch,
  inconsistent_feature,
  io_error,
  equivalence_failure,
  no_latches,
  no_network_loaded,
  invalid_argument,
};

/*! \brief Name of an error code, e.g. "ParseError". */
const char* to_string( errc code );

/*! \brief Base exception for every failure reported by the library. */
class error : public std::runtime_error
{
public:
  error( errc code, const std::string& message )
      : std::runtime_error( message ), code_( code ) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

/*! \brief Malformed input text; carries the 1-based line (or byte offset for binary input). */
class parse_error : public error
{
public:
  parse_error( std::size_t position, const std::string& message, bool byte_offset = false )
      : error( errc::parse_error, ( byte_offset ? "byte " : "line " ) + std::to_string( position ) + ": " + message ),
        position_( position ), byte_offset_( byte_offset ) {}

  std::size_t position() const noexcept { return position_; }
  bool is_byte_offset() const noexcept { return byte_offset_; }

private:
  std::size_t position_;
  bool byte_offset_;
};

} // namespace aigkit
