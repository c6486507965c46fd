#ifndef CUBICS_IO_HPP
#define CUBICS_IO_HPP

#include <string>

#include "cubics/deform.hpp"
#include "cubics/nets.hpp"

namespace cubics {

struct io_error : error {
    using error::error;
};

/// Pair files: { "B": 2x4 array of polynomial strings,
///               "A": 4x2 array of polynomial strings }.
/// Twists are implicit in the resolution shape and validated on load.
PairBA pair_from_json_text(const std::string& text);
std::string pair_to_json_text(const PairBA& p);
PairBA load_pair(const std::string& path);
void save_pair(const PairBA& p, const std::string& path);

/// Net files: { "Q": 2x3 array of polynomial strings }.
NetQ net_from_json_text(const std::string& text);
std::string net_to_json_text(const NetQ& q);
NetQ load_net(const std::string& path);

/// Family files: { "w": ..., "l1": ..., "l2": ...,
///                 "a1": ..., "b1": ..., "a2": ..., "b2": ... }.
DeformationFamily family_from_json_text(const std::string& text);
std::string family_to_json_text(const DeformationFamily& f);
DeformationFamily load_family(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace cubics

#endif
