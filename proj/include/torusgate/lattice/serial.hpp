#ifndef TORUSGATE_LATTICE_SERIAL_HPP
#define TORUSGATE_LATTICE_SERIAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "torusgate/bootstrap/bundle.hpp"
#include "torusgate/keys.hpp"
#include "torusgate/lattice/lwe.hpp"

namespace torusgate {

/// Versioned little-endian binary: magic "TGLW", format version, a record
/// kind byte, the full ParameterSet echo, then 32-bit payload words.
/// Loaders refuse mismatched magic, version, kind, or (when an expected
/// parameter set is supplied) parameter echo.
inline constexpr uint32_t kSerialVersion = 1;

enum class RecordKind : uint8_t {
    SecretKeys = 1,
    CloudKeys = 2,
    LweVector = 3,
};

void save_secret_keys(std::ostream& os, const SecretKeys& sk);
SecretKeys load_secret_keys(std::istream& is);

/// Cloud keys serialize their TGSW rows in coefficient form; Lagrange caches
/// are rebuilt on load for the requested backend.
void save_cloud_keys(std::ostream& os, const CloudKeySet& ck);
CloudKeySet load_cloud_keys(std::istream& is, std::shared_ptr<const TransformBackend> backend);

void save_lwe_vector(std::ostream& os, const ParameterSet& params,
                     const std::vector<LweCiphertext>& cts);
std::vector<LweCiphertext> load_lwe_vector(std::istream& is, const ParameterSet* expected);

void save_file_secret_keys(const std::string& path, const SecretKeys& sk);
SecretKeys load_file_secret_keys(const std::string& path);
void save_file_cloud_keys(const std::string& path, const CloudKeySet& ck);
CloudKeySet load_file_cloud_keys(const std::string& path,
                                 std::shared_ptr<const TransformBackend> backend);

}  // namespace torusgate

#endif
