#include <aigkit/aiger.hpp>
#include <aigkit/augment.hpp>
#include <aigkit/batch.hpp>
#include <aigkit/edgelist.hpp>
#include <aigkit/equivalence.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/lut_map.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace aigkit
{

std::string labels_csv( const std::vector<label_record>& labels )
{
  std::ostringstream os;
  os << "sample_id,seed,and_count,level,lut_count,lut_depth\n";
  for ( const auto& l : labels )
    os << l.sample_id << ',' << l.seed << ',' << l.and_count << ',' << l.level << ',' << l.lut_count << ','
       << l.lut_depth << '\n';
  return os.str();
}

std::string manifest_json( const batch_manifest& m )
{
  nlohmann::ordered_json j;
  j["design"] = m.design;
  j["n"] = m.labels.size();
  j["base_seed"] = m.base_seed;
  auto samples = nlohmann::ordered_json::array();
  for ( std::size_t i = 0; i < m.labels.size(); ++i )
  {
    nlohmann::ordered_json s;
    s["id"] = m.labels[i].sample_id;
    s["file"] = m.files[i];
    s["and_count"] = m.labels[i].and_count;
    s["level"] = m.labels[i].level;
    samples.push_back( std::move( s ) );
  }
  j["samples"] = std::move( samples );
  return j.dump( 2 ) + "\n";
}

std::string feature_file_name( std::size_t sample_id )
{
  return "sample_" + std::to_string( sample_id ) + ".features.csv";
}

batch_manifest batch_generate( const aig& g, const batch_params& ps, const std::filesystem::path& out_dir )
{
  if ( ps.count == 0 )
    throw error( errc::invalid_argument, "sample count must be at least 1" );
  std::error_code ec;
  std::filesystem::create_directories( out_dir, ec );
  if ( ec || !std::filesystem::is_directory( out_dir ) )
    throw error( errc::io_error, "cannot create output directory '" + out_dir.string() + "'" );

  batch_manifest m;
  m.design = g.name();
  m.base_seed = ps.base_seed;
  m.labels.resize( ps.count );
  m.files.resize( ps.count );
  std::vector<std::string> documents( ps.count );
  std::vector<std::string> features( ps.count );

  std::atomic<std::size_t> next{ 0 };
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while ( true )
    {
      const auto i = next.fetch_add( 1 );
      if ( i >= ps.count )
        return;
      try
      {
        aug_config cfg;
        cfg.seed = ps.base_seed + i;
        cfg.zero_rw = ps.zero_rw;
        cfg.zero_rf = ps.zero_rf;
        const auto sample = aig_augment( g, cfg ).network;
        const auto verdict = cec( g, sample ).verdict;
        if ( verdict != cec_verdict::equivalent )
          throw error( errc::equivalence_failure, "sample " + std::to_string( i ) + " (seed " +
                                                      std::to_string( cfg.seed ) + ") is " + to_string( verdict ) +
                                                      " to the original" );
        const auto st = stats( sample );
        const auto luts = klut_map( sample, ps.lut_size );
        m.labels[i] = { i, cfg.seed, st.and_count, st.level, luts.lut_count, luts.lut_depth };
        m.files[i] = "sample_" + std::to_string( i ) + ".el";
        documents[i] = write_edgelist_aig( sample );
        features[i] = write_features_aig( sample );
      }
      catch ( ... )
      {
        std::lock_guard lock( failure_mutex );
        if ( !failure )
          failure = std::current_exception();
        next.store( ps.count );
        return;
      }
    }
  };
  auto threads = ps.threads == 0 ? std::max( 1u, std::thread::hardware_concurrency() ) : ps.threads;
  threads = std::min( threads, ps.count );
  if ( threads <= 1 )
  {
    worker();
  }
  else
  {
    std::vector<std::thread> pool;
    for ( std::size_t t = 0; t < threads; ++t )
      pool.emplace_back( worker );
    for ( auto& t : pool )
      t.join();
  }
  if ( failure )
    std::rethrow_exception( failure );

  for ( std::size_t i = 0; i < ps.count; ++i )
  {
    write_file_atomic( out_dir / m.files[i], documents[i] );
    write_file_atomic( out_dir / feature_file_name( i ), features[i] );
  }
  write_file_atomic( out_dir / "labels.csv", labels_csv( m.labels ) );
  write_file_atomic( out_dir / "manifest.json", manifest_json( m ) );
  return m;
}

} // namespace aigkit
