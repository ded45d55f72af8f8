#ifndef RICCISOL_SPECFILE_HPP
#define RICCISOL_SPECFILE_HPP

#include "riccisol/algebra.hpp"
#include "riccisol/soliton.hpp"

namespace riccisol {

class specfile_error : public std::runtime_error {
public:
  explicit specfile_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Algebra spec file (JSON): dims {r, n}, brackets as a list of
/// {i, j, components}, metric as a symmetric entry list, params as
/// name -> "p/q" strings. Omitted bracket entries are zero.
PairSpec parse_pair_spec(const std::string& json_text);
PairSpec load_pair_spec(const std::string& path);
std::string pair_spec_to_json(const PairSpec& spec);
std::string pair_to_json(const HomogeneousPair& pair);

/// Soliton systems serialize in the same structured format, rows as
/// coefficient lists keyed by unknown name ("x1".."xn", "sigma",
/// "constant").
std::string system_to_json(const SolitonSystem& sys);
SolitonSystem parse_system_json(const std::string& json_text);

} // namespace riccisol

#endif
